"""
proxigraph - 有限半度量空间上的邻近图与路径邻近图

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

__version__ = "0.1.0"

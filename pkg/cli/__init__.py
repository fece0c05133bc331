"""
cli - 命令行前端模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

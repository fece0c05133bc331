"""
cli.commands - CLI 子命令模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from . import classify, check, bpath, witness, verify, example, export

__all__ = ["classify", "check", "bpath", "witness", "verify", "example", "export"]

"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 export-dot 命令
[POS]: cli/commands 的 DOT 导出命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path
from typing import Optional

import typer

from ..client import ProxigraphClient, run_command


def export_dot(
    graph_file: Path = typer.Argument(..., help="图文件"),
    partition_file: Optional[Path] = typer.Option(None, "--partition", "-p", help="按划分着色"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="输出文件，缺省写到标准输出"),
):
    """把图导出为 DOT 文本"""
    run_command(lambda: ProxigraphClient().export_dot(graph_file, partition_file, out))

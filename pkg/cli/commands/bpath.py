"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 bpath 命令：B_path 对列表、be-路径见证与商图 DOT
[POS]: cli/commands 的 B_path 命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path
from typing import Optional, Tuple

import typer

from ..client import ProxigraphClient, run_command


def bpath(
    graph_file: Path = typer.Argument(..., help="图文件"),
    partition_file: Path = typer.Argument(..., help="划分文件"),
    witness: Optional[Tuple[str, str]] = typer.Option(
        None, "--witness", "-w", help="给出 a ∈ A 到 b ∈ B 的 be-路径：--witness a b"
    ),
    quotient: bool = typer.Option(False, "--quotient", "-q", help="附带商图 DOT"),
):
    """计算 B_path：能被 be-路径连接的 (a, b) 对"""
    # 未给出时 typer 可能传入 (None, None)
    pair = witness if witness and all(witness) else None
    run_command(lambda: ProxigraphClient().bpath(graph_file, partition_file, pair, quotient))

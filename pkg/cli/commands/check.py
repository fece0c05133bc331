"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 check 命令与 CheckKind 枚举
[POS]: cli/commands 的判定命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from ..client import ProxigraphClient, run_command


class CheckKind(str, Enum):
    PATH_BIPARTITE = "path-bipartite"
    PATH_COMPLETE = "path-complete"
    PATH_PROXIMINAL = "path-proximinal"
    PROXIMINAL = "proximinal"


def check(
    kind: CheckKind = typer.Argument(..., help="判定类型"),
    graph_file: Path = typer.Argument(..., help="图文件"),
    partition_file: Path = typer.Argument(..., help="划分文件"),
    space_file: Optional[Path] = typer.Option(None, "--space", "-s", help="空间文件（两种邻近判定需要）"),
):
    """判定图在给定划分（与空间）下是否具有某种性质

    用法示例：
        proxigraph check path-proximinal graph.json partition.json --space space.json
    """
    run_command(lambda: ProxigraphClient().check(kind.value, graph_file, partition_file, space_file))

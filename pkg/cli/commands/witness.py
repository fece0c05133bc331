"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 witness 命令与 WitnessKind 枚举
[POS]: cli/commands 的见证构造命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from ..client import ProxigraphClient, run_command


class WitnessKind(str, Enum):
    METRIC = "metric"
    ULTRAMETRIC = "ultrametric"
    PROXIMINAL_METRIC = "proximinal-metric"


def witness(
    kind: WitnessKind = typer.Argument(..., help="见证类型"),
    graph_file: Path = typer.Argument(..., help="图文件"),
    partition_file: Optional[Path] = typer.Option(None, "--partition", "-p", help="划分文件（ultrametric 不需要）"),
    out: Path = typer.Option(Path("witness.json"), "--out", "-o", help="输出文件"),
):
    """构造见证空间并在退出前重新校验

    metric / proximinal-metric 写出空间文件，ultrametric 写出含划分的证书包。
    """
    run_command(lambda: ProxigraphClient().witness(kind.value, graph_file, partition_file, out))

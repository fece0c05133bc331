"""
[INPUT]: 依赖 typer 的 Argument，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 classify 命令：输出空间类别 Semimetric / Metric / Ultrametric
[POS]: cli/commands 的空间分类命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path

import typer

from ..client import ProxigraphClient, run_command


def classify(
    space_file: Path = typer.Argument(..., help="空间文件 {points, distances}"),
):
    """判定空间满足的最强公理类别"""
    run_command(lambda: ProxigraphClient().classify(space_file))

"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 example 命令：写出命名实例包并报告重新核对的断言
[POS]: cli/commands 的实例命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path
from typing import Optional

import typer

from proxigraph.models import TruncationParams
from ..client import ProxigraphClient, run_command


def example(
    name: str = typer.Argument(..., help="cube-path-graph / hamming-cube / four-path / lattice-truncation / isolated-corner"),
    out_dir: Optional[Path] = typer.Option(None, "--out-dir", "-o", help="写出 graph/partition/space 与报告的目录"),
    n: int = typer.Option(2, "--n", help="lattice-truncation: 实轴点上界 N"),
    m: int = typer.Option(2, "--m", help="lattice-truncation: 实部上界 M"),
    k: int = typer.Option(2, "--k", help="lattice-truncation: 虚部上界 K"),
):
    """组装命名实例，重新核对其断言与已知勘误"""
    run_command(lambda: ProxigraphClient().example(name, out_dir, TruncationParams(n=n, m=m, k=k)))

"""
[INPUT]: 依赖 typer 的 Argument/Option，依赖 cli.client 的 ProxigraphClient/run_command
[OUTPUT]: 对外提供 verify 命令：按名字运行穷举或随机校验扫描
[POS]: cli/commands 的校验扫描命令，被 cli/main.py 注册
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Optional

import typer

from ..client import ProxigraphClient, run_command


def verify(
    sweep: str = typer.Argument("be-path-union", help="扫描名，如 be-path-union、ultrametric-diameter"),
    max_n: Optional[int] = typer.Option(None, "--max-n", help="穷举的最大顶点数（默认 PROXIGRAPH_MAX_N）"),
    instances: Optional[int] = typer.Option(None, "--instances", help="随机实例数"),
    seed: int = typer.Option(0, "--seed", help="随机种子"),
    jobs: int = typer.Option(1, "--jobs", "-j", help="工作进程数"),
):
    """运行校验扫描，只有零反例时退出码为 0

    进度按 PROXIGRAPH_PROGRESS_EVERY 写到标准错误，结果写到标准输出。
    """
    run_command(lambda: ProxigraphClient().verify(sweep, max_n, instances, seed, jobs))

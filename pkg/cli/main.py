"""
[INPUT]: 依赖 typer 的 Typer，依赖 cli.commands 的所有子命令模块，依赖 cli.client 的 emit，依赖 proxigraph.core 的 settings 与 BaseError
[OUTPUT]: 对外提供 CLI 应用实例 app，供 proxigraph 脚本调用
[POS]: cli 的应用入口，被 pyproject.toml 的 [project.scripts] 引用
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

import logging
import sys

import typer

from proxigraph.core.config import settings
from proxigraph.core.exceptions import BaseError
from proxigraph.models import CommandResult
from .client import emit
from .commands import classify, check, bpath, witness, verify, example, export

app = typer.Typer(
    name="proxigraph",
    help="proxigraph - 有限半度量空间上的邻近图与路径邻近图判定、构造与校验",
    no_args_is_help=True,
)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="输出 DEBUG 日志"),
    quiet: bool = typer.Option(False, "--quiet", help="只输出 WARNING 及以上日志"),
):
    """配置日志并检查配置上界；日志写到标准错误，结论写到标准输出"""
    level = settings.PROXIGRAPH_LOG_LEVEL.upper()
    if verbose:
        level = "DEBUG"
    elif quiet:
        level = "WARNING"
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
    try:
        settings.check_bounds()
    except BaseError as e:
        emit(CommandResult(verdict="error", diagnostics=[str(e)], exit_code=2))


# 注册子命令
app.command("classify")(classify.classify)
app.command("check")(check.check)
app.command("bpath")(bpath.bpath)
app.command("witness")(witness.witness)
app.command("verify")(verify.verify)
app.command("example")(example.example)
app.command("export-dot")(export.export_dot)


if __name__ == "__main__":
    app()

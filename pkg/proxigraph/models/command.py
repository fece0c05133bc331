"""
[INPUT]: 依赖 pydantic 的 BaseModel
[OUTPUT]: 对外提供 CommandResult/SweepReport 两个模型
[POS]: proxigraph/models 的命令结果模型，被 VerificationService 与 cli 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import List, Optional, Union

from pydantic import BaseModel, Field


class CommandResult(BaseModel):
    """命令结果：首行机器可读的结论 + 诊断信息

    退出码：0 为真/成功，1 为假，2 为用法或格式错误。
    """

    verdict: Union[bool, int, str] = Field(..., description="结论")
    witness: Optional[str] = Field(None, description="写出的见证文件路径")
    diagnostics: List[str] = Field(default_factory=list, description="诊断信息")
    exit_code: Optional[int] = Field(None, description="显式退出码，缺省时由 verdict 推断")

    def verdict_line(self) -> str:
        if isinstance(self.verdict, bool):
            return "true" if self.verdict else "false"
        return str(self.verdict)

    def resolved_exit_code(self) -> int:
        if self.exit_code is not None:
            return self.exit_code
        if isinstance(self.verdict, bool):
            return 0 if self.verdict else 1
        return 0


class SweepReport(BaseModel):
    """一次校验扫描的结果"""

    sweep: str = Field(..., description="扫描名")
    checked: int = Field(0, description="已检查的实例数")
    counterexample: Optional[str] = Field(None, description="第一个反例，无则为空")
    parameters: dict = Field(default_factory=dict, description="本次扫描的上界与种子")

    @property
    def passed(self) -> bool:
        return self.counterexample is None

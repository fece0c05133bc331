"""
[INPUT]: 依赖 pydantic 的 BaseModel，依赖 proxigraph.models 的图/划分/空间模型
[OUTPUT]: 对外提供 Claim/Bundle 两个模型
[POS]: proxigraph/models 的命名实例包模型，被 CatalogService 与 example 命令消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from .graph import Bipartition, SimpleGraph
from .space import FiniteSemimetricSpace


class Claim(BaseModel):
    """一条被重新核对的断言"""

    model_config = ConfigDict(frozen=True)

    statement: str = Field(..., description="断言内容")
    observed: str = Field(..., description="实现算出的值")
    holds: bool = Field(..., description="断言是否成立")


class Bundle(BaseModel):
    """命名实例包：图/划分/空间（按需）+ 核对报告"""

    model_config = ConfigDict(frozen=True)

    name: str
    graph: Optional[SimpleGraph] = None
    parts: Optional[Bipartition] = None
    space: Optional[FiniteSemimetricSpace] = None
    claims: List[Claim] = Field(default_factory=list)
    errata: List[str] = Field(default_factory=list, description="已知勘误说明")

    def all_hold(self) -> bool:
        return all(claim.holds for claim in self.claims)

"""
[INPUT]: 依赖 pydantic 的 BaseModel，依赖 proxigraph.models 的 SimpleGraph/Bipartition/FiniteSemimetricSpace
[OUTPUT]: 对外提供 ProximinalGraphCertificate/PathProximinalCertificate/TruncationParams 三个模型
[POS]: proxigraph/models 的证书与实例参数模型，被邻近图服务、CertificateRepository 与 InstanceService 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from .graph import Bipartition, SimpleGraph
from .space import FiniteSemimetricSpace


class ProximinalGraphCertificate(BaseModel):
    """邻近图证书：图 + 划分 + 使其成为邻近图的空间"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["proximinal"] = "proximinal"
    graph: SimpleGraph
    parts: Bipartition
    space: FiniteSemimetricSpace


class PathProximinalCertificate(BaseModel):
    """路径邻近图证书：图 + 划分 + 使其成为路径邻近图的空间"""

    model_config = ConfigDict(frozen=True)

    kind: Literal["path-proximinal"] = "path-proximinal"
    graph: SimpleGraph
    parts: Bipartition
    space: FiniteSemimetricSpace


class TruncationParams(BaseModel):
    """复格点例子的有限截断参数

    A = {n : 1 ≤ n ≤ N}，B = {m + ik : 0 ≤ m ≤ M, 1 ≤ k ≤ K}
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(2, ge=1, description="实轴点的上界 N")
    m: int = Field(2, ge=0, description="B 中实部的上界 M")
    k: int = Field(2, ge=1, description="B 中虚部的上界 K")

    def point_count(self) -> int:
        return self.n + (self.m + 1) * self.k

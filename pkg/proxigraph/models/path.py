"""
[INPUT]: 依赖 pydantic 的 BaseModel，依赖 proxigraph.models.graph 的 PathSeq
[OUTPUT]: 对外提供 BePathWitness/QuotientGraph 两个模型
[POS]: proxigraph/models 的 be-路径与商图模型，被 PathStructureService 与 DOT 导出消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Dict, FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.exceptions import InvalidPathError
from .graph import Edge, PathSeq


class BePathWitness(BaseModel):
    """be-路径：一条简单路径及其唯一跨部分边的位置"""

    model_config = ConfigDict(frozen=True)

    path: PathSeq = Field(..., description="路径")
    crossing_index: int = Field(..., ge=0, description="跨部分边 (order[i], order[i+1]) 的下标 i")

    @model_validator(mode="after")
    def _check_index(self) -> "BePathWitness":
        if self.crossing_index >= len(self.path.order) - 1:
            raise InvalidPathError(f"跨部分边下标越界: {self.crossing_index}")
        return self

    @property
    def crossing_edge(self) -> Edge:
        i = self.crossing_index
        return (self.path.order[i], self.path.order[i + 1])

    @property
    def endpoints(self) -> Tuple[str, str]:
        return (self.path.start, self.path.end)


class QuotientGraph(BaseModel):
    """商图：G[A] 与 G[B] 的连通分支为顶点，B_path 连接的分支对为边

    分支 id 为 "A1".."Ak" 与 "B1".."Bm"，按分支最小标号排序编号。
    """

    model_config = ConfigDict(frozen=True)

    a_components: Tuple[FrozenSet[str], ...] = Field(..., description="G[A] 的连通分支")
    b_components: Tuple[FrozenSet[str], ...] = Field(..., description="G[B] 的连通分支")
    edges: FrozenSet[Tuple[str, str]] = Field(..., description="(A 分支 id, B 分支 id)")
    representative: Dict[str, str] = Field(..., description="分支 id → 最小标号")

    def a_ids(self) -> List[str]:
        return [f"A{i + 1}" for i in range(len(self.a_components))]

    def b_ids(self) -> List[str]:
        return [f"B{j + 1}" for j in range(len(self.b_components))]

    def members(self, component_id: str) -> FrozenSet[str]:
        index = int(component_id[1:]) - 1
        side = self.a_components if component_id.startswith("A") else self.b_components
        return side[index]

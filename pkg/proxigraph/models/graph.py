"""
[INPUT]: 依赖 pydantic 的 BaseModel/PrivateAttr/validator，依赖 proxigraph.core.exceptions 的图/路径/划分异常
[OUTPUT]: 对外提供 SimpleGraph/PathSeq/Bipartition 三个模型与 normalize_edge 工具函数
[POS]: proxigraph/models 的图数据模型，被 GraphService、PathStructureService 与各 Repository 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from ..core.exceptions import InvalidGraphError, InvalidPartitionError, InvalidPathError

Edge = Tuple[str, str]


def normalize_edge(u: str, v: str) -> Edge:
    """无序边按标号排序存储"""
    return (u, v) if u < v else (v, u)


def check_label(label: Any) -> str:
    """顶点标号必须是不含空白的非空文本"""
    if not isinstance(label, str) or not label or any(ch.isspace() for ch in label):
        raise InvalidGraphError(f"非法顶点标号: {label!r}", code="invalid-label")
    return label


class SimpleGraph(BaseModel):
    """有限简单图：顶点集 + 无序边集，无自环、无重边"""

    model_config = ConfigDict(frozen=True)

    vertices: FrozenSet[str] = Field(..., description="顶点标号集合")
    edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="无序边集合")

    _adjacency: Dict[str, Tuple[str, ...]] = PrivateAttr(default_factory=dict)

    @field_validator("vertices", mode="before")
    @classmethod
    def _check_vertices(cls, value: Any) -> FrozenSet[str]:
        return frozenset(check_label(label) for label in value)

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, value: Any) -> FrozenSet[Edge]:
        normalized = set()
        for pair in value:
            items = tuple(pair)
            if len(items) != 2:
                raise InvalidGraphError(f"边必须恰有两个端点: {pair!r}", code="invalid-edge")
            u, v = items
            if u == v:
                raise InvalidGraphError(f"简单图不允许自环: {u}", code="loop-edge")
            normalized.add(normalize_edge(u, v))
        return frozenset(normalized)

    @model_validator(mode="after")
    def _check_endpoints(self) -> "SimpleGraph":
        for u, v in sorted(self.edges):
            for endpoint in (u, v):
                if endpoint not in self.vertices:
                    raise InvalidGraphError(
                        f"边 {{{u}, {v}}} 的端点未列为顶点: {endpoint}", code="unknown-endpoint"
                    )
        return self

    def model_post_init(self, __context: Any) -> None:
        adjacency: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adjacency.setdefault(u, []).append(v)
            adjacency.setdefault(v, []).append(u)
        self._adjacency = {v: tuple(sorted(ns)) for v, ns in adjacency.items()}

    # ==================== 查询 ====================
    def sorted_vertices(self) -> List[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: str) -> Tuple[str, ...]:
        """按标号升序返回邻居"""
        if v not in self.vertices:
            raise InvalidGraphError(f"顶点不在图中: {v}", code="unknown-vertex")
        return self._adjacency[v]

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and normalize_edge(u, v) in self.edges

    def is_empty(self) -> bool:
        """边集为空（所有顶点都是孤立点）"""
        return not self.edges


class PathSeq(BaseModel):
    """路径 (u0, u1, ..., uk)，k >= 1，顶点两两不同"""

    model_config = ConfigDict(frozen=True)

    order: Tuple[str, ...] = Field(..., description="路径顶点序列")

    @field_validator("order", mode="before")
    @classmethod
    def _check_order(cls, value: Any) -> Tuple[str, ...]:
        order = tuple(value)
        if len(order) < 2:
            raise InvalidPathError(f"路径至少需要两个顶点: {order!r}")
        seen = set()
        repeated = []
        for label in order:
            if label in seen and label not in repeated:
                repeated.append(label)
            seen.add(label)
        if repeated:
            raise InvalidPathError(f"路径顶点重复: {', '.join(repeated)}")
        return order

    def edges(self) -> List[Edge]:
        """相邻顶点构成的边，按路径顺序"""
        return [(self.order[i], self.order[i + 1]) for i in range(len(self.order) - 1)]

    @property
    def start(self) -> str:
        return self.order[0]

    @property
    def end(self) -> str:
        return self.order[-1]


class Bipartition(BaseModel):
    """有序二部划分 (A, B)：两部分非空且不相交"""

    model_config = ConfigDict(frozen=True)

    a: FrozenSet[str] = Field(..., description="部分 A")
    b: FrozenSet[str] = Field(..., description="部分 B")

    @model_validator(mode="after")
    def _check_parts(self) -> "Bipartition":
        if not self.a or not self.b:
            raise InvalidPartitionError("划分的两部分都必须非空", code="empty-part")
        overlap = self.a & self.b
        if overlap:
            raise InvalidPartitionError(
                f"划分的两部分相交: {', '.join(sorted(overlap))}", code="parts-overlap"
            )
        return self

    def union(self) -> FrozenSet[str]:
        return self.a | self.b

    def side(self, v: str) -> Optional[str]:
        """返回顶点所在部分 'A' / 'B'，不在划分中时返回 None"""
        if v in self.a:
            return "A"
        if v in self.b:
            return "B"
        return None

    def crosses(self, u: str, v: str) -> bool:
        """{u, v} ∩ A ≠ ∅ ≠ {u, v} ∩ B"""
        return (u in self.a and v in self.b) or (u in self.b and v in self.a)

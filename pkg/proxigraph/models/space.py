"""
[INPUT]: 依赖 pydantic 的 BaseModel/PrivateAttr，依赖 fractions 的 Fraction，依赖 proxigraph.core.exceptions 的 InvalidSpaceError
[OUTPUT]: 对外提供 SpaceClass/FiniteSemimetricSpace/ProximityReport 三个模型与 to_rational 工具函数
[POS]: proxigraph/models 的有限半度量空间模型，被 MetricService、邻近图服务与 SpaceRepository 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from ..core.exceptions import InvalidSpaceError
from .graph import check_label


def to_rational(value: Any) -> Fraction:
    """整数或 Fraction → 规范化有理数；浮点与布尔值一律拒绝"""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise InvalidSpaceError(f"距离必须是精确有理数: {value!r}", code="invalid-entry")
    return Fraction(value)


class SpaceClass(str, Enum):
    """空间类别：超度量 ⊂ 度量 ⊂ 半度量"""

    SEMIMETRIC = "Semimetric"
    METRIC = "Metric"
    ULTRAMETRIC = "Ultrametric"

    @property
    def rank(self) -> int:
        return {"Semimetric": 0, "Metric": 1, "Ultrametric": 2}[self.value]

    def implies(self, other: "SpaceClass") -> bool:
        """Ultrametric ⇒ Metric ⇒ Semimetric"""
        return self.rank >= other.rank


class FiniteSemimetricSpace(BaseModel):
    """有限半度量空间 (X, d)：点标号 + 对称、对角为零、非对角为正的有理距离表"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    points: Tuple[str, ...] = Field(..., description="点标号，距离表的行列顺序")
    table: Tuple[Tuple[Fraction, ...], ...] = Field(..., description="行优先的距离矩阵")

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("points", mode="before")
    @classmethod
    def _check_points(cls, value: Any) -> Tuple[str, ...]:
        points = tuple(check_label(label) for label in value)
        seen = set()
        for label in points:
            if label in seen:
                raise InvalidSpaceError(f"点标号重复: {label}", code="duplicate-point")
            seen.add(label)
        return points

    @field_validator("table", mode="before")
    @classmethod
    def _coerce_table(cls, value: Any) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(to_rational(entry) for entry in row) for row in value)

    @model_validator(mode="after")
    def _check_axioms(self) -> "FiniteSemimetricSpace":
        n = len(self.points)
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise InvalidSpaceError(f"距离表必须是 {n}×{n} 方阵", code="not-square")
        labels = self.points
        for i in range(n):
            for j in range(n):
                if self.table[i][j] < 0:
                    raise InvalidSpaceError(
                        f"({labels[i]}, {labels[j]}) 处距离为负: {self.table[i][j]}",
                        code="negative-entry",
                    )
        for i in range(n):
            if self.table[i][i] != 0:
                raise InvalidSpaceError(
                    f"({labels[i]}, {labels[i]}) 处对角元非零: {self.table[i][i]}",
                    code="nonzero-diagonal",
                )
        for i in range(n):
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise InvalidSpaceError(
                        f"({labels[i]}, {labels[j]}) 处距离不对称: "
                        f"{self.table[i][j]} ≠ {self.table[j][i]}",
                        code="asymmetric-entry",
                    )
                if self.table[i][j] == 0:
                    raise InvalidSpaceError(
                        f"({labels[i]}, {labels[j]}) 处不同点距离为零", code="zero-off-diagonal"
                    )
        return self

    def model_post_init(self, __context: Any) -> None:
        self._index = {label: i for i, label in enumerate(self.points)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidSpaceError(f"点不在空间中: {label}", code="unknown-point") from None

    def distance(self, x: str, y: str) -> Fraction:
        return self.table[self.index(x)][self.index(y)]

    def point_set(self) -> FrozenSet[str]:
        return frozenset(self.points)

    def __len__(self) -> int:
        return len(self.points)


class ProximityReport(BaseModel):
    """dist(A, B)、A0/B0 与全部最佳邻近对"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    distance: Fraction = Field(..., description="dist(A, B)")
    a0: FrozenSet[str] = Field(..., description="A 中出现在最佳邻近对里的点")
    b0: FrozenSet[str] = Field(..., description="B 中出现在最佳邻近对里的点")
    pairs: FrozenSet[Tuple[str, str]] = Field(..., description="全部最佳邻近对 (a, b)")

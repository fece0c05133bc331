"""
[INPUT]: 依赖 fractions 的 Fraction，依赖 proxigraph.models.space 的 FiniteSemimetricSpace/SpaceClass/ProximityReport
[OUTPUT]: 对外提供 MetricService 类，封装公理分类、集合距离、最佳逼近与最佳邻近对
[POS]: proxigraph/services 的度量基础层，被邻近图、路径邻近图与校验服务消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from fractions import Fraction
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple
import logging

from ..models.graph import Bipartition, SimpleGraph
from ..models.space import FiniteSemimetricSpace, ProximityReport, SpaceClass
from ..core.exceptions import InvalidSpaceError, PreconditionError

logger = logging.getLogger(__name__)

Triple = Tuple[str, str, str]


class MetricService:
    """有限半度量空间上的距离计算

    职责：
    - 构造并校验空间（对称、对角为零、非对角为正）
    - 按三元组穷举判定 半度量 / 度量 / 超度量
    - 集合距离 dist(A, B)、直径、最佳逼近、最佳邻近对与 A0/B0
    - 超度量空间中直径判据两条陈述的求值
    """

    # ==================== 构造 ====================
    def build_space(
        self, points: Sequence[str], table: Sequence[Sequence[Fraction]]
    ) -> FiniteSemimetricSpace:
        space = FiniteSemimetricSpace(points=tuple(points), table=table)
        logger.debug(f"构造空间: {len(space)} 个点")
        return space

    def subspace(self, space: FiniteSemimetricSpace, subset: Iterable[str]) -> FiniteSemimetricSpace:
        """限制到子集上的子空间，点按原顺序保留"""
        keep = set(subset)
        for label in keep:
            space.index(label)
        points = [p for p in space.points if p in keep]
        table = [[space.distance(x, y) for y in points] for x in points]
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    def relabel(self, space: FiniteSemimetricSpace, mapping: Dict[str, str]) -> FiniteSemimetricSpace:
        """按映射重命名点，距离表不变"""
        points = tuple(mapping.get(p, p) for p in space.points)
        return FiniteSemimetricSpace(points=points, table=space.table)

    def graph_metric(self, graph: SimpleGraph) -> FiniteSemimetricSpace:
        """由图的邻接得到的 {0, 1, 2} 值度量：边上为 1，其余不同点对为 2"""
        points = graph.sorted_vertices()
        one, two = Fraction(1), Fraction(2)
        table = [
            [Fraction(0) if x == y else (one if graph.has_edge(x, y) else two) for y in points]
            for x in points
        ]
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    # ==================== 公理分类 ====================
    def triangle_violation(self, space: FiniteSemimetricSpace) -> Optional[Triple]:
        """返回第一个违反 d(a,b) ≤ d(a,c) + d(c,b) 的三元组 (a, b, c)"""
        n = len(space)
        table = space.table
        for i, j, k in product(range(n), repeat=3):
            if table[i][j] > table[i][k] + table[k][j]:
                return (space.points[i], space.points[j], space.points[k])
        return None

    def strong_triangle_violation(self, space: FiniteSemimetricSpace) -> Optional[Triple]:
        """返回第一个违反 d(a,b) ≤ max{d(a,c), d(c,b)} 的三元组 (a, b, c)"""
        n = len(space)
        table = space.table
        for i, j, k in product(range(n), repeat=3):
            if table[i][j] > max(table[i][k], table[k][j]):
                return (space.points[i], space.points[j], space.points[k])
        return None

    def classify(self, space: FiniteSemimetricSpace) -> SpaceClass:
        """满足公理的最强类别"""
        if self.strong_triangle_violation(space) is None:
            return SpaceClass.ULTRAMETRIC
        if self.triangle_violation(space) is None:
            return SpaceClass.METRIC
        return SpaceClass.SEMIMETRIC

    # ==================== 距离 ====================
    def point_distance(self, space: FiniteSemimetricSpace, x: str, y: str) -> Fraction:
        return space.distance(x, y)

    def _nonempty(self, space: FiniteSemimetricSpace, subset: Iterable[str], name: str) -> List[str]:
        labels = sorted(set(subset))
        if not labels:
            raise InvalidSpaceError(f"集合 {name} 不能为空", code="empty-set")
        for label in labels:
            space.index(label)
        return labels

    def set_distance(
        self, space: FiniteSemimetricSpace, a: Iterable[str], b: Iterable[str]
    ) -> Fraction:
        """dist(A, B) = min{d(a, b) : a ∈ A, b ∈ B}"""
        a_labels = self._nonempty(space, a, "A")
        b_labels = self._nonempty(space, b, "B")
        return min(space.distance(x, y) for x in a_labels for y in b_labels)

    def diameter(self, space: FiniteSemimetricSpace, subset: Iterable[str]) -> Fraction:
        """集合内最大两两距离；空集与单点集为 0"""
        labels = sorted(set(subset))
        for label in labels:
            space.index(label)
        best = Fraction(0)
        for i, x in enumerate(labels):
            for y in labels[i + 1 :]:
                best = max(best, space.distance(x, y))
        return best

    def best_approximations(
        self, space: FiniteSemimetricSpace, x: str, a: Iterable[str]
    ) -> FrozenSet[str]:
        """A 中到 x 距离最小的全部点"""
        space.index(x)
        a_labels = self._nonempty(space, a, "A")
        nearest = min(space.distance(x, p) for p in a_labels)
        return frozenset(p for p in a_labels if space.distance(x, p) == nearest)

    def is_proximinal(self, space: FiniteSemimetricSpace, a: Iterable[str]) -> bool:
        """空间中每个点在 A 中都有最佳逼近；有限空间恒为真"""
        a_labels = self._nonempty(space, a, "A")
        return all(self.best_approximations(space, x, a_labels) for x in space.points)

    def proximity_report(self, space: FiniteSemimetricSpace, parts: Bipartition) -> ProximityReport:
        """dist(A, B)、全部最佳邻近对及其在 A、B 上的投影 A0、B0"""
        distance = self.set_distance(space, parts.a, parts.b)
        pairs = frozenset(
            (x, y)
            for x in sorted(parts.a)
            for y in sorted(parts.b)
            if space.distance(x, y) == distance
        )
        return ProximityReport(
            distance=distance,
            a0=frozenset(x for x, _ in pairs),
            b0=frozenset(y for _, y in pairs),
            pairs=pairs,
        )

    # ==================== 超度量直径判据 ====================
    def check_diameter_criterion(
        self,
        space: FiniteSemimetricSpace,
        parts: Bipartition,
        space_class: Optional[SpaceClass] = None,
    ) -> Tuple[bool, bool]:
        """超度量空间中：
        陈述一：diam(B) ≤ dist(A, B)
        陈述二：A0 邻近、B0 = B、且 A0 × B0 中每一对都是最佳邻近对

        同一空间上检查多个划分时，可传入已算出的 space_class 跳过三元组扫描。
        """
        if space_class is None:
            space_class = self.classify(space)
        if space_class is not SpaceClass.ULTRAMETRIC:
            raise PreconditionError("直径判据只适用于超度量空间", code="not-ultrametric")
        report = self.proximity_report(space, parts)
        first = self.diameter(space, parts.b) <= report.distance
        second = (
            self.is_proximinal(space, report.a0)
            and report.b0 == parts.b
            and all(
                space.distance(x, y) == report.distance for x in report.a0 for y in report.b0
            )
        )
        return first, second

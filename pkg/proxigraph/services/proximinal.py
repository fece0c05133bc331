"""
[INPUT]: 依赖 proxigraph.services 的 GraphService/MetricService，依赖 proxigraph.models 的图/划分/空间/证书模型
[OUTPUT]: 对外提供 ProximinalGraphService 类，封装邻近二部图的构造、校验与见证度量
[POS]: proxigraph/services 的邻近图层，被路径邻近图服务、校验扫描与 cli 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Optional
import logging

from .graph import GraphService
from .metric import MetricService
from ..models.graph import Bipartition, SimpleGraph
from ..models.space import FiniteSemimetricSpace
from ..models.certificate import ProximinalGraphCertificate
from ..core.exceptions import InvalidPartitionError, PreconditionError

logger = logging.getLogger(__name__)


def require_covering(space: FiniteSemimetricSpace, parts: Bipartition) -> None:
    """A ∪ B 必须恰为空间的点集"""
    if parts.union() != space.point_set():
        missing = space.point_set() ^ parts.union()
        raise InvalidPartitionError(
            f"划分未恰好覆盖空间的点集: {', '.join(sorted(missing))}", code="parts-not-covering"
        )


def require_vertex_match(graph: SimpleGraph, space: FiniteSemimetricSpace) -> None:
    if graph.vertices != space.point_set():
        diff = graph.vertices ^ space.point_set()
        raise PreconditionError(
            f"图的顶点集与空间的点集不一致: {', '.join(sorted(diff))}", code="vertex-mismatch"
        )


class ProximinalGraphService:
    """邻近二部图：{a, b} 为边当且仅当 d(a, b) = dist(A, B)

    职责：
    - 由空间与划分构造邻近图
    - 校验给定图对给定空间是否为邻近图
    - 为任意非空二部图构造 {0, 1, 2} 值的见证度量
    """

    def __init__(
        self, graphs: Optional[GraphService] = None, metrics: Optional[MetricService] = None
    ):
        self.graphs = graphs or GraphService()
        self.metrics = metrics or MetricService()

    def build_proximinal_graph(
        self, space: FiniteSemimetricSpace, parts: Bipartition
    ) -> SimpleGraph:
        """A ∪ B 上的二部图，边恰为全部最佳邻近对"""
        require_covering(space, parts)
        report = self.metrics.proximity_report(space, parts)
        return SimpleGraph(vertices=space.point_set(), edges=report.pairs)

    def verify_proximinal_graph(
        self, graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
    ) -> bool:
        """G 以 (A, B) 为部分二部、A 与 B 邻近、且边恰为最佳邻近对"""
        require_vertex_match(graph, space)
        if not self.graphs.is_bipartite_with_parts(graph, parts):
            return False
        if not (
            self.metrics.is_proximinal(space, parts.a) and self.metrics.is_proximinal(space, parts.b)
        ):
            return False
        return graph.edges == self.build_proximinal_graph(space, parts).edges

    def witness_proximinal_metric(
        self, graph: SimpleGraph, parts: Bipartition
    ) -> FiniteSemimetricSpace:
        """边上取 1、其余不同点对取 2 的度量，使 G 成为邻近图"""
        if not self.graphs.is_bipartite_with_parts(graph, parts):
            raise PreconditionError("图不是以给定划分为部分的二部图", code="not-bipartite-with-parts")
        if graph.is_empty():
            raise PreconditionError("有限空图不是邻近图", code="empty-graph")
        space = self.metrics.graph_metric(graph)
        logger.debug(f"邻近图见证度量: {len(space)} 个点, {len(graph.edges)} 条边")
        return space

    def certificate(self, graph: SimpleGraph, parts: Bipartition) -> ProximinalGraphCertificate:
        return ProximinalGraphCertificate(
            graph=graph, parts=parts, space=self.witness_proximinal_metric(graph, parts)
        )

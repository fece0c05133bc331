"""
[INPUT]: 依赖 proxigraph.services 的 GraphService/MetricService/ProximinalGraphService/PathStructureService
[OUTPUT]: 对外提供 PathProximinalService 类，封装阈值图、路径邻近校验、结构判据、见证度量与超度量度数一判据
[POS]: proxigraph/services 的路径邻近图层，位于依赖链最上层，被实例目录、校验扫描与 cli 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Optional, Tuple
import logging

from .graph import GraphService
from .metric import MetricService
from .path import PathStructureService
from .proximinal import ProximinalGraphService, require_covering, require_vertex_match
from ..models.graph import Bipartition, SimpleGraph
from ..models.space import FiniteSemimetricSpace, SpaceClass
from ..models.certificate import PathProximinalCertificate
from ..core.exceptions import PreconditionError

logger = logging.getLogger(__name__)


class PathProximinalService:
    """路径邻近图：{x, y} 为边当且仅当 d(x, y) ≤ dist(A, B)，且图是 (A, B) 的路径二部图

    职责：
    - 由空间与划分构造阈值图并完整校验
    - 结构判据：A∖A0 中每点在阈值图的 A 侧诱导子图内可达 A0，B 侧同理
    - 为路径二部图与无孤立点的图构造 {0, 1, 2} 值见证度量
    - 邻近图与路径邻近图的交：满投影与部分内分离
    - 超度量见证：存在当且仅当每个顶点度数为一
    """

    def __init__(
        self,
        graphs: Optional[GraphService] = None,
        metrics: Optional[MetricService] = None,
    ):
        self.graphs = graphs or GraphService()
        self.metrics = metrics or MetricService()
        self.paths = PathStructureService(self.graphs)
        self.proximinal = ProximinalGraphService(self.graphs, self.metrics)

    # ==================== 阈值图与校验 ====================
    def build_threshold_graph(self, space: FiniteSemimetricSpace, parts: Bipartition) -> SimpleGraph:
        """全部点上的图，0 < d(x, y) ≤ dist(A, B) 时连边；允许部分内的边"""
        require_covering(space, parts)
        threshold = self.metrics.set_distance(space, parts.a, parts.b)
        points = space.points
        edges = [
            (x, y)
            for i, x in enumerate(points)
            for y in points[i + 1 :]
            if space.distance(x, y) <= threshold
        ]
        logger.debug(f"阈值图: 阈值 {threshold}, {len(edges)} 条边")
        return SimpleGraph(vertices=space.point_set(), edges=edges)

    def verify_path_proximinal(
        self, graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
    ) -> bool:
        """G 等于阈值图、是路径二部图、且 A 与 B 邻近"""
        require_vertex_match(graph, space)
        if graph.edges != self.build_threshold_graph(space, parts).edges:
            return False
        if not self.paths.is_path_bipartite(graph, parts):
            return False
        return self.metrics.is_proximinal(space, parts.a) and self.metrics.is_proximinal(
            space, parts.b
        )

    def check_structural_conditions(self, space: FiniteSemimetricSpace, parts: Bipartition) -> bool:
        """A∖A0 的每点在阈值图的 G[A] 中连到 A0，B∖B0 的每点在 G[B] 中连到 B0"""
        threshold_graph = self.build_threshold_graph(space, parts)
        report = self.metrics.proximity_report(space, parts)
        for side, anchors in ((parts.a, report.a0), (parts.b, report.b0)):
            induced = self.graphs.induced_subgraph(threshold_graph, side)
            for component in self.graphs.connected_components(induced):
                if not component & anchors:
                    logger.debug(f"分支 {sorted(component)} 到不了最佳邻近点")
                    return False
        return True

    # ==================== 见证度量 ====================
    def witness_metric_for_path_bipartite(
        self, graph: SimpleGraph, parts: Bipartition
    ) -> FiniteSemimetricSpace:
        """边上取 1、其余不同点对取 2；此时 dist(A, B) = 1 且阈值图恰为 G"""
        reason = self.paths.path_bipartite_violation(graph, parts)
        if reason is not None:
            raise PreconditionError(f"不是路径二部图: {reason}", code="not-path-bipartite")
        return self.metrics.graph_metric(graph)

    def is_path_proximinal_graph(self, graph: SimpleGraph) -> Optional[PathProximinalCertificate]:
        """无孤立点时给出证书，否则返回 None"""
        parts = self.paths.find_path_bipartite_partition(graph)
        if parts is None:
            return None
        space = self.witness_metric_for_path_bipartite(graph, parts)
        return PathProximinalCertificate(graph=graph, parts=parts, space=space)

    # ==================== 邻近图 ∩ 路径邻近图 ====================
    def check_full_projection(
        self, graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
    ) -> bool:
        """邻近图上 A0 = A 且 B0 = B；与 G 无孤立点等价"""
        if not self.proximinal.verify_proximinal_graph(graph, parts, space):
            raise PreconditionError("给定的图不是该空间的邻近图", code="not-a-proximinal-graph")
        report = self.metrics.proximity_report(space, parts)
        return report.a0 == parts.a and report.b0 == parts.b

    def check_within_part_separation(self, space: FiniteSemimetricSpace, parts: Bipartition) -> bool:
        """同一部分内任意两个不同点的距离都严格大于 dist(A, B)"""
        require_covering(space, parts)
        threshold = self.metrics.set_distance(space, parts.a, parts.b)
        for side in (parts.a, parts.b):
            labels = sorted(side)
            for i, x in enumerate(labels):
                for y in labels[i + 1 :]:
                    if space.distance(x, y) <= threshold:
                        return False
        return True

    # ==================== 超度量与度数一 ====================
    def all_degrees_one(self, graph: SimpleGraph) -> bool:
        if not graph.vertices:
            return False
        return all(self.graphs.degree(graph, v) == 1 for v in graph.vertices)

    def witness_ultrametric(self, graph: SimpleGraph) -> Optional[PathProximinalCertificate]:
        """每个顶点度数为一时：每条边的较小标号归 A，较大标号归 B，距离取 {0, 1, 2}"""
        if not self.all_degrees_one(graph):
            return None
        a = frozenset(u for u, _ in graph.edges)
        b = frozenset(v for _, v in graph.edges)
        space = self.metrics.graph_metric(graph)
        return PathProximinalCertificate(graph=graph, parts=Bipartition(a=a, b=b), space=space)

    def all_components_two_vertices(self, graph: SimpleGraph) -> bool:
        """每个连通分支恰有两个顶点；与 all_degrees_one 等价"""
        if not graph.vertices:
            return False
        return all(len(c) == 2 for c in self.graphs.connected_components(graph))

    def ultrametric_connectivity_statements(
        self, graph: SimpleGraph, parts: Bipartition, space: FiniteSemimetricSpace
    ) -> Tuple[bool, bool, bool, bool]:
        """超度量路径邻近二部图上的四条陈述：连通、完全、G[A, B] 完全二部、路径完全"""
        if self.metrics.classify(space) is not SpaceClass.ULTRAMETRIC:
            raise PreconditionError("空间不是超度量空间")
        if not self.graphs.is_bipartite_with_parts(graph, parts):
            raise PreconditionError("图不是以给定划分为部分的二部图")
        if not self.verify_path_proximinal(graph, parts, space):
            raise PreconditionError("图不是该空间的路径邻近图")
        cross = self.graphs.induced_bipartite_subgraph(graph, parts)
        return (
            self.graphs.is_connected(graph),
            self.graphs.is_complete(graph),
            self.graphs.is_complete_bipartite(cross, parts),
            self.paths.is_path_complete(graph, parts),
        )

"""
[INPUT]: 依赖 proxigraph.services.graph 的 GraphService，依赖 proxigraph.models 的图/路径/商图模型，依赖 proxigraph.core.config 的 settings
[OUTPUT]: 对外提供 PathStructureService 类，封装 be-路径、路径二部判定、B_path、路径完全性与商图
[POS]: proxigraph/services 的路径结构层，被路径邻近图服务、校验扫描与 cli 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple, Union
import logging

from .graph import GraphService
from ..models.graph import Bipartition, PathSeq, SimpleGraph
from ..models.path import BePathWitness, QuotientGraph
from ..core.config import settings
from ..core.exceptions import BoundExceededError, InvalidPartitionError, PreconditionError

logger = logging.getLogger(__name__)

Pair = Tuple[str, str]
RawBePath = Tuple[Tuple[str, ...], int]


class PathStructureService:
    """路径二部图的结构计算

    职责：
    - be-路径识别（恰有一条跨部分边的简单路径）
    - 路径二部判定：V(G) = A ∪ B 且每个连通分支与 A、B 都相交
    - B_path：按分支判据计算，穷举 be-路径作为对照
    - 路径完全性与商图 G(A, B)
    - 为无孤立点的图给出一个路径二部划分
    """

    def __init__(self, graphs: Optional[GraphService] = None):
        self.graphs = graphs or GraphService()

    # ==================== 前置条件 ====================
    def _require_covering(self, graph: SimpleGraph, parts: Bipartition) -> None:
        if graph.vertices != parts.union():
            diff = graph.vertices ^ parts.union()
            raise InvalidPartitionError(
                f"划分未恰好覆盖图的顶点集: {', '.join(sorted(diff))}", code="parts-not-covering"
            )

    def _side_components(
        self, graph: SimpleGraph, parts: Bipartition
    ) -> Tuple[List[FrozenSet[str]], List[FrozenSet[str]]]:
        """G[A] 与 G[B] 的连通分支"""
        a_components = self.graphs.connected_components(
            self.graphs.induced_subgraph(graph, parts.a)
        )
        b_components = self.graphs.connected_components(
            self.graphs.induced_subgraph(graph, parts.b)
        )
        return a_components, b_components

    # ==================== be-路径 ====================
    def is_be_path(
        self, graph: SimpleGraph, seq: Union[PathSeq, Sequence[str]], parts: Bipartition
    ) -> Optional[BePathWitness]:
        """恰有一条跨部分边且顶点都在 A ∪ B 中时返回见证"""
        path = seq if isinstance(seq, PathSeq) else PathSeq(order=tuple(seq))
        self.graphs.validate_path(graph, path)
        union = parts.union()
        if any(v not in union for v in path.order):
            return None
        crossing = [i for i, (u, v) in enumerate(path.edges()) if parts.crosses(u, v)]
        if len(crossing) != 1:
            return None
        return BePathWitness(path=path, crossing_index=crossing[0])

    def _iter_be_paths(self, graph: SimpleGraph, parts: Bipartition) -> Iterator[RawBePath]:
        """深度优先扩展全部简单路径；出现第二条跨部分边即剪枝"""
        union = parts.union()

        def extend(order: List[str], visited: Set[str], crossing_index: int) -> Iterator[RawBePath]:
            last = order[-1]
            for nb in graph.neighbors(last):
                if nb in visited or nb not in union:
                    continue
                crosses = parts.crosses(last, nb)
                if crosses and crossing_index >= 0:
                    continue
                index = len(order) - 1 if crosses else crossing_index
                order.append(nb)
                visited.add(nb)
                if index >= 0:
                    yield tuple(order), index
                yield from extend(order, visited, index)
                order.pop()
                visited.discard(nb)

        for root in graph.sorted_vertices():
            if root in union:
                yield from extend([root], {root}, -1)

    def _require_oracle_bound(self, graph: SimpleGraph) -> None:
        bound = settings.PROXIGRAPH_ORACLE_MAX_VERTICES
        if len(graph.vertices) > bound:
            raise BoundExceededError(
                f"穷举 be-路径最多支持 {bound} 个顶点，当前 {len(graph.vertices)}"
            )

    def enumerate_be_paths(self, graph: SimpleGraph, parts: Bipartition) -> FrozenSet[BePathWitness]:
        """全部 be-路径（正反两个方向视为不同见证）"""
        self._require_oracle_bound(graph)
        self._require_covering(graph, parts)
        return frozenset(
            BePathWitness(path=PathSeq(order=order), crossing_index=index)
            for order, index in self._iter_be_paths(graph, parts)
        )

    def enumerated_bpath_pairs(self, graph: SimpleGraph, parts: Bipartition) -> FrozenSet[Pair]:
        """由穷举 be-路径得到的 B_path，作为分支判据的对照"""
        self._require_oracle_bound(graph)
        self._require_covering(graph, parts)
        pairs = set()
        for order, _ in self._iter_be_paths(graph, parts):
            start, end = order[0], order[-1]
            if start in parts.a and end in parts.b:
                pairs.add((start, end))
        return frozenset(pairs)

    def union_of_be_paths(self, graph: SimpleGraph, parts: Bipartition) -> SimpleGraph:
        """全部 be-路径的并；没有 be-路径时为空顶点集的图"""
        self._require_oracle_bound(graph)
        self._require_covering(graph, parts)
        vertices: Set[str] = set()
        edges: Set[Pair] = set()
        for order, _ in self._iter_be_paths(graph, parts):
            vertices.update(order)
            edges.update(zip(order, order[1:]))
        return SimpleGraph(vertices=frozenset(vertices), edges=edges)

    # ==================== 路径二部 ====================
    def path_bipartite_violation(self, graph: SimpleGraph, parts: Bipartition) -> Optional[str]:
        """不是路径二部图时给出原因，否则返回 None"""
        if graph.vertices != parts.union():
            diff = sorted(graph.vertices ^ parts.union())
            return f"V(G) ≠ A ∪ B: {', '.join(diff)}"
        for component in self.graphs.connected_components(graph):
            if not component & parts.a:
                return f"连通分支 {{{', '.join(sorted(component))}}} 与 A 不相交"
            if not component & parts.b:
                return f"连通分支 {{{', '.join(sorted(component))}}} 与 B 不相交"
        return None

    def is_path_bipartite(self, graph: SimpleGraph, parts: Bipartition) -> bool:
        """V(G) = A ∪ B 且每个连通分支与 A、B 都相交"""
        return self.path_bipartite_violation(graph, parts) is None

    def find_path_bipartite_partition(self, graph: SimpleGraph) -> Optional[Bipartition]:
        """无孤立点时：A 取各分支最小标号顶点，B 取其余顶点"""
        if not graph.vertices or not self.graphs.is_pruned(graph):
            return None
        components = self.graphs.connected_components(graph)
        a = frozenset(min(component) for component in components)
        return Bipartition(a=a, b=graph.vertices - a)

    def is_universally_path_bipartite(self, graph: SimpleGraph) -> bool:
        """对 V(G) 的每个覆盖划分都是路径二部图：连通且 G = G′"""
        return self.graphs.is_pruned(graph) and self.graphs.is_connected(graph)

    # ==================== B_path ====================
    def bpath_pairs(self, graph: SimpleGraph, parts: Bipartition) -> FrozenSet[Pair]:
        """(a, b) ∈ B_path 当且仅当 a、b 所在分支 A1、B1 的并诱导出连通子图"""
        self._require_covering(graph, parts)
        a_components, b_components = self._side_components(graph, parts)
        pairs: Set[Pair] = set()
        for a_block in a_components:
            for b_block in b_components:
                joined = self.graphs.induced_subgraph(graph, a_block | b_block)
                if self.graphs.is_connected(joined):
                    pairs.update((a, b) for a in a_block for b in b_block)
        return frozenset(pairs)

    def be_path_witness(
        self, graph: SimpleGraph, parts: Bipartition, a: str, b: str
    ) -> Optional[BePathWitness]:
        """G[A] 中 a 到跨边端点的最短路 + 跨边 + G[B] 中到 b 的最短路

        跨边取 A1 × B1 中字典序最小的边；(a, b) ∉ B_path 时返回 None。
        """
        if a not in parts.a or b not in parts.b:
            raise PreconditionError(f"需要 a ∈ A 且 b ∈ B: ({a}, {b})", code="wrong-side")
        self._require_covering(graph, parts)
        a_graph = self.graphs.induced_subgraph(graph, parts.a)
        b_graph = self.graphs.induced_subgraph(graph, parts.b)
        a_block = next(c for c in self.graphs.connected_components(a_graph) if a in c)
        b_block = next(c for c in self.graphs.connected_components(b_graph) if b in c)

        cross_edges = sorted(
            (x, y) for x in a_block for y in b_block if graph.has_edge(x, y)
        )
        if not cross_edges:
            return None
        x, y = cross_edges[0]

        a_segment = [a] if a == x else list(self.graphs.find_path(a_graph, a, x).order)
        b_segment = [b] if b == y else list(self.graphs.find_path(b_graph, y, b).order)
        order = tuple(a_segment + b_segment)
        return BePathWitness(path=PathSeq(order=order), crossing_index=len(a_segment) - 1)

    def is_path_complete(self, graph: SimpleGraph, parts: Bipartition) -> bool:
        """B_path = A × B"""
        return len(self.bpath_pairs(graph, parts)) == len(parts.a) * len(parts.b)

    # ==================== 商图 ====================
    def quotient_graph(self, graph: SimpleGraph, parts: Bipartition) -> QuotientGraph:
        """以 G[A]、G[B] 的分支为顶点，B_path 连接的分支对为边"""
        self._require_covering(graph, parts)
        a_components, b_components = self._side_components(graph, parts)
        bpath = self.bpath_pairs(graph, parts)
        representative = {}
        for i, block in enumerate(a_components):
            representative[f"A{i + 1}"] = min(block)
        for j, block in enumerate(b_components):
            representative[f"B{j + 1}"] = min(block)
        edges = frozenset(
            (f"A{i + 1}", f"B{j + 1}")
            for i, a_block in enumerate(a_components)
            for j, b_block in enumerate(b_components)
            if any((a, b) in bpath for a in a_block for b in b_block)
        )
        return QuotientGraph(
            a_components=tuple(a_components),
            b_components=tuple(b_components),
            edges=edges,
            representative=representative,
        )

    def is_quotient_complete_bipartite(self, quotient: QuotientGraph) -> bool:
        return len(quotient.edges) == len(quotient.a_components) * len(quotient.b_components)

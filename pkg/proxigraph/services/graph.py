"""
[INPUT]: 依赖 networkx 的 Graph/连通分支/BFS，依赖 proxigraph.models.graph 的 SimpleGraph/PathSeq/Bipartition
[OUTPUT]: 对外提供 GraphService 类，封装图构造、诱导子图、连通分支与路径查找
[POS]: proxigraph/services 的图基础层，被路径结构、邻近图与实例生成服务消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence
import logging

import networkx as nx

from ..models.graph import Bipartition, PathSeq, SimpleGraph, check_label
from ..core.exceptions import (
    InvalidGraphError,
    InvalidPartitionError,
    InvalidPathError,
    PreconditionError,
)

logger = logging.getLogger(__name__)


class GraphService:
    """有限简单图的构造与连通性工具

    职责：
    - 由标号列表构造并校验简单图
    - 诱导子图、诱导二部子图、并图、去孤立点
    - 连通分支（按最小标号排序）与 BFS 最短路径（按标号顺序扩展）

    所有操作都是纯函数，输入图不会被修改。
    """

    # ==================== 构造 ====================
    def build_graph(
        self, vertices: Sequence[str], edges: Iterable[Sequence[str]] = ()
    ) -> SimpleGraph:
        """由顶点标号列表与边列表构造简单图，重边合并"""
        seen = set()
        for label in vertices:
            check_label(label)
            if label in seen:
                raise InvalidGraphError(f"顶点重复: {label}", code="duplicate-vertex")
            seen.add(label)
        graph = SimpleGraph(vertices=frozenset(seen), edges=[tuple(edge) for edge in edges])
        logger.debug(f"构造图: |V|={len(graph.vertices)}, |E|={len(graph.edges)}")
        return graph

    def to_networkx(self, graph: SimpleGraph) -> nx.Graph:
        """转换为 networkx 图，顶点与边按标号顺序插入"""
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(graph.sorted_vertices())
        nx_graph.add_edges_from(graph.sorted_edges())
        return nx_graph

    # ==================== 子图 ====================
    def induced_subgraph(self, graph: SimpleGraph, subset: Iterable[str]) -> SimpleGraph:
        """G[S]：顶点集 S，保留两端都在 S 中的边"""
        subset = frozenset(subset)
        if not subset:
            raise InvalidGraphError("诱导子图的顶点集不能为空", code="empty-subset")
        missing = subset - graph.vertices
        if missing:
            raise InvalidGraphError(
                f"顶点集不是 V(G) 的子集: {', '.join(sorted(missing))}", code="not-subset"
            )
        edges = [(u, v) for u, v in graph.edges if u in subset and v in subset]
        return SimpleGraph(vertices=subset, edges=edges)

    def induced_bipartite_subgraph(self, graph: SimpleGraph, parts: Bipartition) -> SimpleGraph:
        """G[A, B]：顶点集 A ∪ B，只保留跨两部分的边"""
        union = parts.union()
        missing = union - graph.vertices
        if missing:
            raise InvalidPartitionError(
                f"划分不是 V(G) 的子集: {', '.join(sorted(missing))}", code="parts-not-subset"
            )
        edges = [(u, v) for u, v in graph.edges if parts.crosses(u, v)]
        return SimpleGraph(vertices=union, edges=edges)

    def is_subgraph(self, sub: SimpleGraph, graph: SimpleGraph) -> bool:
        return sub.vertices <= graph.vertices and sub.edges <= graph.edges

    def graph_union(self, graphs: Sequence[SimpleGraph]) -> SimpleGraph:
        """并图：顶点集与边集分别取并"""
        if not graphs:
            raise InvalidGraphError("并图至少需要一个图", code="empty-list")
        vertices: set = set()
        edges: set = set()
        for graph in graphs:
            vertices |= graph.vertices
            edges |= graph.edges
        return SimpleGraph(vertices=frozenset(vertices), edges=edges)

    def prune_isolated(self, graph: SimpleGraph) -> SimpleGraph:
        """G′：删去孤立点，边集不变；空图没有 G′"""
        if graph.is_empty():
            raise PreconditionError("空图没有去孤立点子图 G′", code="empty-graph")
        vertices = {endpoint for edge in graph.edges for endpoint in edge}
        return SimpleGraph(vertices=frozenset(vertices), edges=graph.edges)

    # ==================== 度与完全性 ====================
    def degree(self, graph: SimpleGraph, v: str) -> int:
        """v 的邻居数；v 不在图中时抛出 unknown-vertex"""
        return graph.degree(v)

    def isolated_vertices(self, graph: SimpleGraph) -> FrozenSet[str]:
        return frozenset(v for v in graph.vertices if self.degree(graph, v) == 0)

    def is_pruned(self, graph: SimpleGraph) -> bool:
        """G = G′：非空且无孤立点"""
        return not graph.is_empty() and not self.isolated_vertices(graph)

    def is_complete(self, graph: SimpleGraph) -> bool:
        n = len(graph.vertices)
        return len(graph.edges) == n * (n - 1) // 2

    def is_bipartite_with_parts(self, graph: SimpleGraph, parts: Bipartition) -> bool:
        """V(G) = A ∪ B 且没有边落在同一部分内"""
        if graph.vertices != parts.union():
            return False
        return all(parts.crosses(u, v) for u, v in graph.edges)

    def is_complete_bipartite(self, graph: SimpleGraph, parts: Bipartition) -> bool:
        if not self.is_bipartite_with_parts(graph, parts):
            return False
        return len(graph.edges) == len(parts.a) * len(parts.b)

    # ==================== 连通性 ====================
    def connected_components(self, graph: SimpleGraph) -> List[FrozenSet[str]]:
        """连通分支，按各分支最小标号排序"""
        components = [frozenset(c) for c in nx.connected_components(self.to_networkx(graph))]
        return sorted(components, key=min)

    def component_index(self, graph: SimpleGraph) -> Dict[str, int]:
        """顶点 → 所在连通分支的序号"""
        return {
            v: i for i, component in enumerate(self.connected_components(graph)) for v in component
        }

    def is_connected(self, graph: SimpleGraph) -> bool:
        """恰有一个连通分支；单点图连通"""
        return len(self.connected_components(graph)) == 1

    def find_path(self, graph: SimpleGraph, u: str, v: str) -> Optional[PathSeq]:
        """BFS 最短路径，邻居按标号顺序扩展；不同分支时返回 None"""
        for endpoint in (u, v):
            if endpoint not in graph.vertices:
                raise InvalidGraphError(f"顶点不在图中: {endpoint}", code="unknown-vertex")
        if u == v:
            raise InvalidGraphError(f"路径两端相同: {u}", code="equal-endpoints")

        predecessors = dict(
            nx.bfs_predecessors(self.to_networkx(graph), u, sort_neighbors=sorted)
        )
        if v not in predecessors:
            return None
        order = [v]
        while order[-1] != u:
            order.append(predecessors[order[-1]])
        return PathSeq(order=tuple(reversed(order)))

    def validate_path(self, graph: SimpleGraph, path: PathSeq) -> None:
        """路径的相邻顶点必须在宿主图中相邻"""
        for label in path.order:
            if label not in graph.vertices:
                raise InvalidPathError(f"路径顶点不在图中: {label}")
        for u, v in path.edges():
            if not graph.has_edge(u, v):
                raise InvalidPathError(f"{u} 与 {v} 在图中不相邻")

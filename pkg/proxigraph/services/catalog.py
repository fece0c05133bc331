"""
[INPUT]: 依赖 proxigraph.services 的 InstanceService/PathStructureService/PathProximinalService 等领域服务
[OUTPUT]: 对外提供 CatalogService 类与 PRINTED_CUBE_BPATH 常量，按名字组装实例包并重新核对其断言
[POS]: proxigraph/services 的实例目录层，被 cli 的 example 命令消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple
import logging

from .graph import GraphService
from .metric import MetricService
from .path import PathStructureService
from .path_proximinal import PathProximinalService
from .instances import CUBE_A, CUBE_ERRATUM, InstanceService
from ..models.catalog import Bundle, Claim
from ..models.certificate import TruncationParams
from ..models.graph import Bipartition, SimpleGraph
from ..models.space import SpaceClass
from ..core.exceptions import InvalidPathError, PreconditionError

logger = logging.getLogger(__name__)

# 立方体路径二部图上印出的 46 对 B_path，是实际 64 对的真子集
PRINTED_CUBE_BPATH: List[Tuple[str, str]] = [
    ("x1", "x5"), ("x1", "x6"), ("x1", "x7"), ("x1", "x8"), ("x1", "x13"), ("x1", "x14"),
    ("x1", "x15"), ("x1", "x16"), ("x2", "x6"), ("x2", "x13"), ("x2", "x16"), ("x3", "x5"),
    ("x3", "x8"), ("x3", "x14"), ("x3", "x15"), ("x3", "x16"), ("x4", "x7"), ("x4", "x8"),
    ("x4", "x13"), ("x4", "x15"), ("x4", "x16"), ("x9", "x5"), ("x9", "x6"), ("x9", "x8"),
    ("x9", "x13"), ("x9", "x14"), ("x9", "x15"), ("x9", "x16"), ("x10", "x6"), ("x10", "x8"),
    ("x10", "x13"), ("x10", "x14"), ("x10", "x16"), ("x11", "x5"), ("x11", "x8"),
    ("x11", "x14"), ("x11", "x15"), ("x11", "x16"), ("x12", "x5"), ("x12", "x6"),
    ("x12", "x7"), ("x12", "x8"), ("x12", "x13"), ("x12", "x14"), ("x12", "x15"),
    ("x12", "x16"),
]

# (x4, x15) 名下印出的四条 be-路径
PRINTED_X4_X15_PATHS: List[Tuple[str, ...]] = [
    ("x4", "x7", "x15"),
    ("x4", "x7", "x13", "x6", "x14", "x16", "x15"),
    ("x4", "x7", "x13", "x16", "x15"),
    ("x4", "x7", "x13", "x16", "x14", "x6", "x13", "x16", "x15"),
]


def _claim(statement: str, observed: object, holds: bool) -> Claim:
    if isinstance(observed, bool):
        observed = "true" if observed else "false"
    return Claim(statement=statement, observed=str(observed), holds=holds)


class CatalogService:
    """命名实例包

    职责：
    - cube-path-graph：四维立方体顶点上的 25 边路径二部图
    - hamming-cube：四维 Hamming 空间、同一划分与阈值图
    - four-path：路径 a1-b1-a2-b2
    - lattice-truncation：复格点空间的有限截断
    - isolated-corner：A 上的 Hamming 邻接图，x1 为孤立点

    每个包附带重新核对的断言与已知勘误。
    """

    def __init__(self):
        self.graphs = GraphService()
        self.metrics = MetricService()
        self.instances = InstanceService(self.metrics)
        self.paths = PathStructureService(self.graphs)
        self.path_proximinal = PathProximinalService(self.graphs, self.metrics)

    def names(self) -> List[str]:
        return sorted(self._builders())

    def _builders(self) -> Dict[str, Callable[[TruncationParams], Bundle]]:
        return {
            "cube-path-graph": lambda _: self._cube_path_graph(),
            "hamming-cube": lambda _: self._hamming_cube(),
            "four-path": lambda _: self._four_path(),
            "lattice-truncation": self._lattice_truncation,
            "isolated-corner": lambda _: self._isolated_corner(),
        }

    def build_bundle(self, name: str, params: Optional[TruncationParams] = None) -> Bundle:
        builder = self._builders().get(name)
        if builder is None:
            raise PreconditionError(
                f"未知实例: {name}（可选: {', '.join(self.names())}）", code="unknown-name"
            )
        bundle = builder(params or TruncationParams())
        logger.info(f"实例包 {name}: {len(bundle.claims)} 条断言, 全部成立={bundle.all_hold()}")
        return bundle

    # ==================== 各实例包 ====================
    def _cube_path_graph(self) -> Bundle:
        graph, parts = self.instances.cube_path_graph()
        bpath = self.paths.bpath_pairs(graph, parts)
        claims = [
            _claim("G 连通", self.graphs.is_connected(graph), self.graphs.is_connected(graph)),
            _claim("|E(G)| = 25", len(graph.edges), len(graph.edges) == 25),
            _claim(
                "G 是 (A, B) 的路径二部图",
                self.paths.is_path_bipartite(graph, parts),
                self.paths.is_path_bipartite(graph, parts),
            ),
            _claim("|B_path| = 64 = |A × B|", len(bpath), len(bpath) == 64),
        ]
        return Bundle(name="cube-path-graph", graph=graph, parts=parts, claims=claims, errata=[CUBE_ERRATUM])

    def _hamming_cube(self) -> Bundle:
        space = self.instances.cube_hamming_space()
        cube_graph, parts = self.instances.cube_path_graph()
        threshold_graph = self.path_proximinal.build_threshold_graph(space, parts)
        distance = self.metrics.set_distance(space, parts.a, parts.b)
        verified = self.path_proximinal.verify_path_proximinal(threshold_graph, parts, space)
        complete = self.paths.is_path_complete(threshold_graph, parts)
        space_class = self.metrics.classify(space)
        contained = self.graphs.is_subgraph(cube_graph, threshold_graph)

        bpath = self.paths.bpath_pairs(cube_graph, parts)
        printed = frozenset(PRINTED_CUBE_BPATH)
        omitted = sorted(bpath - printed)
        witness = self.paths.be_path_witness(cube_graph, parts, "x2", "x5")
        witness_text = " → ".join(witness.path.order) if witness else "无"

        claims = [
            _claim("dist(A, B) = 1", distance, distance == 1),
            _claim("空间类别为 Metric", space_class.value, space_class is SpaceClass.METRIC),
            _claim("阈值图有 32 条边", len(threshold_graph.edges), len(threshold_graph.edges) == 32),
            _claim("25 边的立方体路径二部图是阈值图的子图", contained, contained),
            _claim("阈值图是 (A, B) 的路径邻近图", verified, verified),
            _claim("阈值图路径完全", complete, complete),
            _claim(
                "印出的 46 对是计算出的 B_path 的真子集",
                f"{len(printed)} ⊂ {len(bpath)}",
                len(printed) == 46 and printed < bpath,
            ),
            _claim("(x2, x5) ∈ B_path 的见证 be-路径", witness_text, witness is not None),
        ]

        errata = [
            f"印出的 B_path 列表漏掉 {len(omitted)} 对: "
            + ", ".join(f"({a},{b})" for a, b in omitted),
            CUBE_ERRATUM,
        ]
        for order in PRINTED_X4_X15_PATHS:
            errata.extend(self._printed_path_note(cube_graph, parts, order))
        return Bundle(
            name="hamming-cube",
            graph=threshold_graph,
            parts=parts,
            space=space,
            claims=claims,
            errata=errata,
        )

    def _printed_path_note(
        self, graph: SimpleGraph, parts: Bipartition, order: Tuple[str, ...]
    ) -> List[str]:
        """印出的 be-路径在立方体路径二部图中不成立时给出说明"""
        try:
            if self.paths.is_be_path(graph, order, parts) is not None:
                return []
            return [f"({', '.join(order)}) 不是 be-路径：跨部分边不唯一"]
        except InvalidPathError as e:
            return [f"({', '.join(order)}) 不是路径: {e.message}"]

    def _four_path(self) -> Bundle:
        graph = self.graphs.build_graph(
            ["a1", "b1", "a2", "b2"], [("a1", "b1"), ("b1", "a2"), ("a2", "b2")]
        )
        parts = Bipartition(a=frozenset({"a1", "a2"}), b=frozenset({"b1", "b2"}))
        bpath = self.paths.bpath_pairs(graph, parts)
        quotient = self.paths.quotient_graph(graph, parts)
        complete = self.paths.is_path_complete(graph, parts)
        claims = [
            _claim("P 连通", self.graphs.is_connected(graph), self.graphs.is_connected(graph)),
            _claim("P 是路径二部图", self.paths.is_path_bipartite(graph, parts),
                   self.paths.is_path_bipartite(graph, parts)),
            _claim("|B_path| = 3", len(bpath), len(bpath) == 3),
            _claim("(a1, b2) ∉ B_path", ("a1", "b2") not in bpath, ("a1", "b2") not in bpath),
            _claim("P 不是路径完全的", complete, not complete),
            _claim("商图不是完全二部图", len(quotient.edges),
                   not self.paths.is_quotient_complete_bipartite(quotient)),
        ]
        space = self.path_proximinal.witness_metric_for_path_bipartite(graph, parts)
        return Bundle(name="four-path", graph=graph, parts=parts, space=space, claims=claims)

    def _lattice_truncation(self, params: TruncationParams) -> Bundle:
        space, parts = self.instances.lattice_truncation(params)
        threshold_graph = self.path_proximinal.build_threshold_graph(space, parts)
        distance = self.metrics.set_distance(space, parts.a, parts.b)
        space_class = self.metrics.classify(space)
        expected = Fraction(2) if params.m >= 1 else Fraction(5, 2)
        claims = [
            _claim(f"dist(A, B) = {expected}", distance, distance == expected),
            _claim("空间满足三角不等式", space_class.value, space_class.implies(SpaceClass.METRIC)),
        ]
        if params.n >= 2:
            d12 = self.metrics.point_distance(space, "1", "2")
            claims.append(_claim("d(1, 2) = 3/2 < dist(A, B)", d12, d12 == Fraction(3, 2) < distance))
        if params.m >= 1:
            complete = self.paths.is_path_complete(threshold_graph, parts)
            verified = self.path_proximinal.verify_path_proximinal(threshold_graph, parts, space)
            claims.append(_claim("阈值图路径完全", complete, complete))
            claims.append(_claim("阈值图是路径邻近图", verified, verified))
        return Bundle(
            name="lattice-truncation", graph=threshold_graph, parts=parts, space=space, claims=claims
        )

    def _isolated_corner(self) -> Bundle:
        space = self.metrics.subspace(self.instances.cube_hamming_space(), CUBE_A)
        points = sorted(space.points)
        edges = [
            (x, y)
            for i, x in enumerate(points)
            for y in points[i + 1 :]
            if space.distance(x, y) == 1
        ]
        graph = SimpleGraph(vertices=frozenset(points), edges=edges)
        isolated = self.graphs.isolated_vertices(graph)
        certificate = self.path_proximinal.is_path_proximinal_graph(graph)
        never = not any(
            self.path_proximinal.verify_path_proximinal(graph, parts, space)
            for parts in self.instances.all_bipartitions(points)
        )
        claims = [
            _claim("x1 是孤立点", ", ".join(sorted(isolated)), isolated == {"x1"}),
            _claim("不存在路径邻近证书", certificate is None, certificate is None),
            _claim("任何划分下都不是 Hamming 距离的路径邻近图", never, never),
        ]
        return Bundle(name="isolated-corner", graph=graph, space=space, claims=claims)

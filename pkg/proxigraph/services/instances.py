"""
[INPUT]: 依赖 random 的 Random（按种子确定），依赖 proxigraph.services.metric 的 MetricService，依赖 proxigraph.core.config 的 settings
[OUTPUT]: 对外提供 InstanceService 类与 CUBE_COORDINATES/CUBE_EDGES/CUBE_ERRATUM 常量
[POS]: proxigraph/services 的实例生成层，被目录、校验扫描与 cli 的 example 命令消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from fractions import Fraction
from itertools import combinations
from random import Random
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union
import logging

from .metric import MetricService
from ..models.graph import Bipartition, SimpleGraph
from ..models.space import FiniteSemimetricSpace
from ..models.certificate import TruncationParams
from ..core.config import settings
from ..core.exceptions import BoundExceededError, PreconditionError

logger = logging.getLogger(__name__)

# ==================== 四维立方体上的路径二部图 ====================
# x14 取 (1,1,1,0)：边 {x5,x14}、{x6,x14}、{x14,x16} 都是 Hamming 距离 1，且 16 个点两两不同
CUBE_COORDINATES: Dict[str, str] = {
    "x1": "1000", "x2": "0100", "x3": "0010", "x4": "0001",
    "x5": "1010", "x6": "1100", "x7": "1001", "x8": "0000",
    "x9": "0110", "x10": "0101", "x11": "0011", "x12": "0111",
    "x13": "1101", "x14": "1110", "x15": "1011", "x16": "1111",
}

CUBE_EDGES: List[Tuple[str, str]] = [
    ("x1", "x5"), ("x1", "x6"), ("x1", "x7"), ("x1", "x8"), ("x2", "x6"),
    ("x2", "x9"), ("x2", "x10"), ("x3", "x5"), ("x3", "x8"), ("x3", "x9"),
    ("x3", "x11"), ("x4", "x7"), ("x4", "x8"), ("x4", "x10"), ("x5", "x14"),
    ("x5", "x15"), ("x6", "x13"), ("x6", "x14"), ("x7", "x15"), ("x9", "x12"),
    ("x10", "x12"), ("x11", "x12"), ("x13", "x16"), ("x14", "x16"), ("x15", "x16"),
]

CUBE_A = frozenset({"x1", "x2", "x3", "x4", "x9", "x10", "x11", "x12"})
CUBE_B = frozenset({"x5", "x6", "x7", "x8", "x13", "x14", "x15", "x16"})

CUBE_ERRATUM = (
    "原始坐标表把 x14 与 x16 都写成 (1,1,1,1)；x14 已更正为 (1,1,1,0)，"
    "这是与边 {x5,x14}、{x6,x14}、{x14,x16} 的 Hamming 距离 1 相容的唯一取值"
)

Probability = Union[Fraction, float, int]


def _labels(prefix: str, n: int) -> List[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


class InstanceService:
    """例子与测试族的生成器

    职责：
    - Hamming 立方体空间、四维立方体上的路径二部图、复格点空间的有限截断
    - 穷举：给定顶点数的全部标号图、给定点集的全部有序二划分
    - 随机：超度量空间、半度量空间、图与二部图（按种子确定）
    """

    def __init__(self, metrics: Optional[MetricService] = None):
        self.metrics = metrics or MetricService()

    # ==================== 例子 ====================
    def hypercube_space(self, n: int) -> FiniteSemimetricSpace:
        """{0,1}^n 上的 Hamming 距离，点以比特串标号"""
        bound = settings.PROXIGRAPH_MAX_HYPERCUBE_DIM
        if not 1 <= n <= bound:
            raise BoundExceededError(f"维数需在 1..{bound} 之间: {n}", code="out-of-range")
        points = [format(i, f"0{n}b") for i in range(2**n)]
        table = [
            [Fraction(sum(a != b for a, b in zip(x, y))) for y in points] for x in points
        ]
        logger.debug(f"Hamming 立方体: n={n}, {len(points)} 个点")
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    def cube_path_graph(self) -> Tuple[SimpleGraph, Bipartition]:
        """四维立方体顶点 x1..x16 上的 25 条边的连通图及其划分"""
        graph = SimpleGraph(vertices=frozenset(CUBE_COORDINATES), edges=CUBE_EDGES)
        return graph, Bipartition(a=CUBE_A, b=CUBE_B)

    def cube_hamming_space(self) -> FiniteSemimetricSpace:
        """四维 Hamming 空间，点按坐标表改名为 x1..x16"""
        by_bits = {bits: label for label, bits in CUBE_COORDINATES.items()}
        return self.metrics.relabel(self.hypercube_space(4), by_bits)

    def lattice_truncation(
        self, params: Optional[TruncationParams] = None
    ) -> Tuple[FiniteSemimetricSpace, Bipartition]:
        """A = {1..N} 在实轴上，B = {m + ki : 0 ≤ m ≤ M, 1 ≤ k ≤ K}

        不同点之间 d = |Δx|/2 + |Δy| + 1；点的坐标都是整数，取整即恒等。
        M ≥ 1 时 dist(A, B) = 2，M = 0 时为 5/2。
        """
        params = params or TruncationParams()
        bound = settings.PROXIGRAPH_MAX_TRUNCATION_POINTS
        if params.point_count() > bound:
            raise BoundExceededError(f"截断最多 {bound} 个点，当前 {params.point_count()}")

        coords: Dict[str, Tuple[int, int]] = {}
        for n in range(1, params.n + 1):
            coords[str(n)] = (n, 0)
        for m in range(params.m + 1):
            for k in range(1, params.k + 1):
                coords[f"{m}+{k}i"] = (m, k)

        points = list(coords)

        def d(p: str, q: str) -> Fraction:
            if p == q:
                return Fraction(0)
            (x1, y1), (x2, y2) = coords[p], coords[q]
            return Fraction(abs(x1 - x2), 2) + abs(y1 - y2) + 1

        table = [[d(p, q) for q in points] for p in points]
        space = FiniteSemimetricSpace(points=tuple(points), table=table)
        a = frozenset(str(n) for n in range(1, params.n + 1))
        return space, Bipartition(a=a, b=space.point_set() - a)

    # ==================== 穷举族 ====================
    def enumerate_labeled_graphs(self, n: int) -> Iterator[SimpleGraph]:
        """v1..vn 上的全部 2^(n(n-1)/2) 个标号图，按边集位掩码顺序"""
        settings.check_bounds()
        bound = settings.PROXIGRAPH_MAX_N
        if not 1 <= n <= bound:
            raise BoundExceededError(f"顶点数需在 1..{bound} 之间: {n}", code="out-of-range")
        vertices = _labels("v", n)
        pairs = list(combinations(vertices, 2))
        for mask in range(2 ** len(pairs)):
            edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
            yield SimpleGraph(vertices=frozenset(vertices), edges=edges)

    def all_bipartitions(self, vertices: Iterable[str]) -> Iterator[Bipartition]:
        """全部有序划分 (A, B)，A、B 非空且覆盖点集，共 2^n - 2 个"""
        labels = sorted(set(vertices))
        if len(labels) < 2:
            raise PreconditionError(f"至少需要 2 个点，当前 {len(labels)}", code="too-small")
        full = (1 << len(labels)) - 1
        for mask in range(1, full):
            a = frozenset(v for i, v in enumerate(labels) if mask >> i & 1)
            yield Bipartition(a=a, b=frozenset(labels) - a)

    # ==================== 随机族 ====================
    def _require_point_count(self, n: int) -> None:
        bound = settings.PROXIGRAPH_MAX_RANDOM_POINTS
        if not 2 <= n <= bound:
            raise BoundExceededError(f"点数需在 2..{bound} 之间: {n}", code="out-of-range")

    def random_ultrametric_space(self, n: int, seed: int) -> FiniteSemimetricSpace:
        """随机层次划分：被同一块分开的两点距离取该块的层级，层级沿分支严格递减"""
        self._require_point_count(n)
        rng = Random(seed)
        points = _labels("p", n)
        index = {p: i for i, p in enumerate(points)}
        table = [[Fraction(0)] * n for _ in range(n)]

        def split(block: List[str], level: Fraction) -> None:
            if len(block) < 2:
                return
            rng.shuffle(block)
            parts = rng.randint(2, min(3, len(block)))
            cuts = sorted(rng.sample(range(1, len(block)), parts - 1))
            children = [block[i:j] for i, j in zip([0] + cuts, cuts + [len(block)])]
            for left, right in combinations(children, 2):
                for x in left:
                    for y in right:
                        table[index[x]][index[y]] = table[index[y]][index[x]] = level
            for child in children:
                split(child, level * Fraction(rng.choice([1, 2, 3]), 4))

        split(list(points), Fraction(rng.randint(2, 8)))
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    def random_semimetric_space(
        self, n: int, seed: int, max_value: int = 4
    ) -> FiniteSemimetricSpace:
        """非对角元取自 {1/2, 1, 3/2, ..., max_value}，不保证三角不等式"""
        self._require_point_count(n)
        if max_value < 1:
            raise PreconditionError(f"max_value 至少为 1: {max_value}", code="out-of-range")
        rng = Random(seed)
        points = _labels("p", n)
        table = [[Fraction(0)] * n for _ in range(n)]
        for i, j in combinations(range(n), 2):
            table[i][j] = table[j][i] = Fraction(rng.randint(1, 2 * max_value), 2)
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    def _check_probability(self, p: Probability) -> None:
        if not 0 <= p <= 1:
            raise PreconditionError(f"边概率需在 [0, 1] 中: {p}", code="probability-out-of-range")

    def random_graph(self, n: int, edge_probability: Probability, seed: int) -> SimpleGraph:
        """v1..vn 上每条可能的边独立以给定概率出现"""
        if n < 1:
            raise BoundExceededError(f"顶点数至少为 1: {n}", code="out-of-range")
        self._check_probability(edge_probability)
        rng = Random(seed)
        vertices = _labels("v", n)
        edges = [pair for pair in combinations(vertices, 2) if rng.random() < edge_probability]
        return SimpleGraph(vertices=frozenset(vertices), edges=edges)

    def random_bipartite_graph(
        self, parts: Bipartition, edge_probability: Probability, seed: int
    ) -> SimpleGraph:
        """只在 A × B 上随机连边"""
        self._check_probability(edge_probability)
        rng = Random(seed)
        edges = [
            (a, b)
            for a in sorted(parts.a)
            for b in sorted(parts.b)
            if rng.random() < edge_probability
        ]
        return SimpleGraph(vertices=parts.union(), edges=edges)

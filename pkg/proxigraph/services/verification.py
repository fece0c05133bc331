"""
[INPUT]: 依赖 concurrent.futures 的进程池，依赖 proxigraph.services 的全部领域服务，依赖 proxigraph.core.config 的 settings
[OUTPUT]: 对外提供 VerificationService 类与 SWEEPS 注册表，每个扫描 = 实例族 + 纯检查函数
[POS]: proxigraph/services 的校验扫描层，被 cli 的 verify 命令消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from collections import deque
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from random import Random
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple
import logging

from .graph import GraphService
from .metric import MetricService
from .path import PathStructureService
from .proximinal import ProximinalGraphService
from .path_proximinal import PathProximinalService
from .instances import InstanceService
from ..models.graph import Bipartition, SimpleGraph
from ..models.space import FiniteSemimetricSpace, SpaceClass
from ..models.command import SweepReport
from ..core.config import settings
from ..core.exceptions import BoundExceededError, PreconditionError

logger = logging.getLogger(__name__)

# 检查函数在工作进程中运行，服务实例按模块级单例共享
_graphs = GraphService()
_metrics = MetricService()
_paths = PathStructureService(_graphs)
_proximinal = ProximinalGraphService(_graphs, _metrics)
_path_proximinal = PathProximinalService(_graphs, _metrics)
_instances = InstanceService(_metrics)

RANDOM_ULTRAMETRIC_MAX_POINTS = 8
RANDOM_SEMIMETRIC_MAX_POINTS = 7

# 并行时每个任务携带的实例数，以及每个工作进程最多在途的任务数
PARALLEL_CHUNK_SIZE = 64
PARALLEL_CHUNKS_PER_JOB = 4


@dataclass(frozen=True)
class SweepBounds:
    max_n: int
    instances: int
    seed: int


@dataclass(frozen=True)
class Sweep:
    name: str
    statement: str
    family: Callable[[SweepBounds], Iterator[Any]]
    check: Callable[[Any], Optional[str]]


# ==================== 实例描述 ====================
def _describe_graph(graph: SimpleGraph) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in graph.sorted_edges())
    return f"V={{{','.join(graph.sorted_vertices())}}} E=[{edges}]"


def _describe_parts(parts: Bipartition) -> str:
    return f"A={{{','.join(sorted(parts.a))}}} B={{{','.join(sorted(parts.b))}}}"


def _describe_space(space: FiniteSemimetricSpace) -> str:
    rows = "; ".join(" ".join(str(d) for d in row) for row in space.table)
    return f"points={list(space.points)} d=[{rows}]"


# ==================== 实例族 ====================
def _graph_family(bounds: SweepBounds) -> Iterator[SimpleGraph]:
    for n in range(1, bounds.max_n + 1):
        yield from _instances.enumerate_labeled_graphs(n)


def _partitioned_family(bounds: SweepBounds) -> Iterator[Tuple[SimpleGraph, Bipartition]]:
    """全部标号图 × 全部覆盖划分"""
    for n in range(2, bounds.max_n + 1):
        for graph in _instances.enumerate_labeled_graphs(n):
            for parts in _instances.all_bipartitions(graph.vertices):
                yield graph, parts


def _bipartite_family(bounds: SweepBounds) -> Iterator[Tuple[SimpleGraph, Bipartition]]:
    """全部以 (A, B) 为部分的二部图"""
    for n in range(2, bounds.max_n + 1):
        vertices = [f"v{i}" for i in range(1, n + 1)]
        for parts in _instances.all_bipartitions(vertices):
            cross = [(a, b) for a in sorted(parts.a) for b in sorted(parts.b)]
            for mask in range(2 ** len(cross)):
                edges = [pair for bit, pair in enumerate(cross) if mask >> bit & 1]
                yield SimpleGraph(vertices=frozenset(vertices), edges=edges), parts


def _pruned_bipartite_family(bounds: SweepBounds) -> Iterator[Tuple[SimpleGraph, Bipartition]]:
    for graph, parts in _bipartite_family(bounds):
        if _graphs.is_pruned(graph):
            yield graph, parts


def _random_spaces(
    bounds: SweepBounds, max_points: int, make: Callable[[int, int], FiniteSemimetricSpace]
) -> Iterator[Tuple[FiniteSemimetricSpace, Bipartition]]:
    rng = Random(bounds.seed)
    top = min(max_points, settings.PROXIGRAPH_MAX_RANDOM_POINTS)
    for _ in range(bounds.instances):
        space = make(rng.randint(2, top), rng.randrange(2**31))
        for parts in _instances.all_bipartitions(space.points):
            yield space, parts


def _ultrametric_family(bounds: SweepBounds) -> Iterator[Tuple[FiniteSemimetricSpace, Bipartition]]:
    return _random_spaces(
        bounds, RANDOM_ULTRAMETRIC_MAX_POINTS, _instances.random_ultrametric_space
    )


def _classified_ultrametric_family(
    bounds: SweepBounds,
) -> Iterator[Tuple[FiniteSemimetricSpace, SpaceClass, Bipartition]]:
    """每个空间只分类一次，类别随划分一起传给检查函数"""
    current: Optional[FiniteSemimetricSpace] = None
    space_class = SpaceClass.SEMIMETRIC
    for space, parts in _ultrametric_family(bounds):
        if space is not current:
            current, space_class = space, _metrics.classify(space)
        yield space, space_class, parts


def _semimetric_family(bounds: SweepBounds) -> Iterator[Tuple[FiniteSemimetricSpace, Bipartition]]:
    return _random_spaces(
        bounds, RANDOM_SEMIMETRIC_MAX_POINTS, _instances.random_semimetric_space
    )


def _separation_family(
    bounds: SweepBounds,
) -> Iterator[Tuple[SimpleGraph, Bipartition, FiniteSemimetricSpace]]:
    """无孤立点的二部图，配见证度量及一个部分内距离随机扰动的空间"""
    rng = Random(bounds.seed)
    for graph, parts in _pruned_bipartite_family(bounds):
        yield graph, parts, _metrics.graph_metric(graph)
        points = graph.sorted_vertices()
        table = [[Fraction(0)] * len(points) for _ in points]
        for i, j in combinations(range(len(points)), 2):
            x, y = points[i], points[j]
            if graph.has_edge(x, y):
                value = Fraction(1)
            elif parts.crosses(x, y):
                value = Fraction(2)
            else:
                value = Fraction(rng.randint(1, 6), 2)
            table[i][j] = table[j][i] = value
        yield graph, parts, FiniteSemimetricSpace(points=tuple(points), table=table)


def _degree_one_family(bounds: SweepBounds) -> Iterator[Any]:
    """全部标号图，之后是随机超度量空间 × 覆盖划分"""
    yield from _graph_family(bounds)
    yield from _ultrametric_family(bounds)


def _ultrametric_certificate_family(
    bounds: SweepBounds,
) -> Iterator[Tuple[SimpleGraph, Bipartition, FiniteSemimetricSpace]]:
    """超度量见证证书，以及随机超度量空间中满足前置条件的阈值图"""
    for graph in _graph_family(bounds):
        certificate = _path_proximinal.witness_ultrametric(graph)
        if certificate is not None:
            yield certificate.graph, certificate.parts, certificate.space
    for space, parts in _ultrametric_family(bounds):
        threshold_graph = _path_proximinal.build_threshold_graph(space, parts)
        if _graphs.is_bipartite_with_parts(
            threshold_graph, parts
        ) and _path_proximinal.verify_path_proximinal(threshold_graph, parts, space):
            yield threshold_graph, parts, space


# ==================== 检查函数 ====================
def check_be_path_union(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    expected = _paths.is_path_bipartite(graph, parts)
    if expected != (_paths.union_of_be_paths(graph, parts) == graph):
        return f"路径二部={expected} 与 be-路径并不一致: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_bpath_components(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    fast = _paths.bpath_pairs(graph, parts)
    if fast != _paths.enumerated_bpath_pairs(graph, parts):
        return f"分支判据与穷举的 B_path 不同: {_describe_graph(graph)} {_describe_parts(parts)}"
    a_index = _graphs.component_index(_graphs.induced_subgraph(graph, parts.a))
    b_index = _graphs.component_index(_graphs.induced_subgraph(graph, parts.b))
    for a, b in fast:
        for x in parts.a:
            for y in parts.b:
                if a_index[x] == a_index[a] and b_index[y] == b_index[b] and (x, y) not in fast:
                    return f"({a},{b}) ∈ B_path 但 ({x},{y}) 不在: {_describe_graph(graph)}"
    return None


def check_quotient_completeness(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    complete = _paths.is_path_complete(graph, parts)
    quotient = _paths.is_quotient_complete_bipartite(_paths.quotient_graph(graph, parts))
    if complete != quotient:
        return f"路径完全={complete} 商图完全二部={quotient}: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_singleton_part_completeness(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    if min(len(parts.a), len(parts.b)) != 1 or not _paths.is_path_bipartite(graph, parts):
        return None
    connected = _graphs.is_connected(graph)
    if connected != _paths.is_path_complete(graph, parts):
        return f"单点部分时连通={connected} 与路径完全不一致: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_pruned_partition(graph: SimpleGraph) -> Optional[str]:
    pruned = _graphs.is_pruned(graph)
    exists = len(graph.vertices) >= 2 and any(
        _paths.is_path_bipartite(graph, parts)
        for parts in _instances.all_bipartitions(graph.vertices)
    )
    if exists != pruned:
        return f"存在路径二部划分={exists} 而 G=G′ 为 {pruned}: {_describe_graph(graph)}"
    parts = _paths.find_path_bipartite_partition(graph)
    if (parts is not None) != pruned:
        return f"构造划分与 G=G′ 不一致: {_describe_graph(graph)}"
    if parts is not None and not _paths.is_path_bipartite(graph, parts):
        return f"构造划分不是路径二部划分: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_universal_partition(graph: SimpleGraph) -> Optional[str]:
    if len(graph.vertices) < 2:
        return None
    every = all(
        _paths.is_path_bipartite(graph, parts)
        for parts in _instances.all_bipartitions(graph.vertices)
    )
    if every != _paths.is_universally_path_bipartite(graph):
        return f"对所有划分路径二部={every} 与连通且 G=G′ 不一致: {_describe_graph(graph)}"
    return None


def check_complete_bipartite(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    if not _graphs.is_bipartite_with_parts(graph, parts):
        return None
    left = _paths.is_path_bipartite(graph, parts) and _paths.is_path_complete(graph, parts)
    if left != _graphs.is_complete_bipartite(graph, parts):
        return f"路径二部且路径完全={left} 与完全二部不一致: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_union_decomposition(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    a_side = _graphs.induced_subgraph(graph, parts.a)
    b_side = _graphs.induced_subgraph(graph, parts.b)
    cross = _graphs.induced_bipartite_subgraph(graph, parts)
    if _graphs.graph_union([a_side, b_side, cross]) != graph:
        return f"G ≠ G[A] ∪ G[B] ∪ G[A,B]: {_describe_graph(graph)} {_describe_parts(parts)}"
    if (
        _graphs.is_connected(a_side)
        and _graphs.is_connected(b_side)
        and not cross.is_empty()
        and not _graphs.is_connected(graph)
    ):
        return f"两侧连通且有跨边但 G 不连通: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_proximinal_witness(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    if graph.is_empty():
        return None
    space = _proximinal.witness_proximinal_metric(graph, parts)
    if not _metrics.classify(space).implies(SpaceClass.METRIC):
        return f"见证度量不满足三角不等式: {_describe_graph(graph)}"
    if not _proximinal.verify_proximinal_graph(graph, parts, space):
        return f"见证度量下不是邻近图: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_isolated_vertex_certificate(graph: SimpleGraph) -> Optional[str]:
    certificate = _path_proximinal.is_path_proximinal_graph(graph)
    pruned = _graphs.is_pruned(graph)
    if (certificate is not None) != pruned:
        return f"证书存在={certificate is not None} 而无孤立点={pruned}: {_describe_graph(graph)}"
    if certificate is not None and not _path_proximinal.verify_path_proximinal(
        certificate.graph, certificate.parts, certificate.space
    ):
        return f"证书未通过校验: {_describe_graph(graph)} {_describe_parts(certificate.parts)}"
    return None


def check_ultrametric_diameter(
    instance: Tuple[FiniteSemimetricSpace, SpaceClass, Bipartition],
) -> Optional[str]:
    space, space_class, parts = instance
    first, second = _metrics.check_diameter_criterion(space, parts, space_class)
    if first != second:
        return f"直径判据两条陈述为 {first}/{second}: {_describe_space(space)} {_describe_parts(parts)}"
    return None


def check_structural_conditions(instance: Tuple[FiniteSemimetricSpace, Bipartition]) -> Optional[str]:
    space, parts = instance
    structural = _path_proximinal.check_structural_conditions(space, parts)
    threshold_graph = _path_proximinal.build_threshold_graph(space, parts)
    if structural != _paths.is_path_bipartite(threshold_graph, parts):
        return f"结构判据={structural} 与阈值图路径二部不一致: {_describe_space(space)} {_describe_parts(parts)}"
    return None


def check_positive_distance(instance: Tuple[FiniteSemimetricSpace, Bipartition]) -> Optional[str]:
    space, parts = instance
    threshold_graph = _path_proximinal.build_threshold_graph(space, parts)
    if not _path_proximinal.verify_path_proximinal(threshold_graph, parts, space):
        return None
    report = _metrics.proximity_report(space, parts)
    if report.distance <= 0 or not report.pairs:
        return f"路径邻近但 dist={report.distance}: {_describe_space(space)} {_describe_parts(parts)}"
    return None


def check_full_projection(instance: Tuple[SimpleGraph, Bipartition]) -> Optional[str]:
    graph, parts = instance
    if graph.is_empty():
        return None
    space = _proximinal.witness_proximinal_metric(graph, parts)
    full = _path_proximinal.check_full_projection(graph, parts, space)
    if full != (not _graphs.isolated_vertices(graph)):
        return f"A0=A 且 B0=B 为 {full} 与无孤立点不一致: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


def check_within_part_separation(
    instance: Tuple[SimpleGraph, Bipartition, FiniteSemimetricSpace],
) -> Optional[str]:
    graph, parts, space = instance
    if not _proximinal.verify_proximinal_graph(graph, parts, space):
        return f"实例不是邻近图: {_describe_graph(graph)} {_describe_space(space)}"
    path_proximinal = _path_proximinal.verify_path_proximinal(graph, parts, space)
    if path_proximinal != _path_proximinal.check_within_part_separation(space, parts):
        return f"路径邻近={path_proximinal} 与部分内分离不一致: {_describe_graph(graph)} {_describe_space(space)}"
    return None


def check_degree_one_ultrametric(instance: Any) -> Optional[str]:
    if isinstance(instance, SimpleGraph):
        graph = instance
        certificate = _path_proximinal.witness_ultrametric(graph)
        if (certificate is not None) != _path_proximinal.all_degrees_one(graph):
            return f"超度量证书存在={certificate is not None} 与度数全为一不一致: {_describe_graph(graph)}"
        if certificate is None:
            return None
        if _metrics.classify(certificate.space) is not SpaceClass.ULTRAMETRIC:
            return f"证书空间不是超度量: {_describe_graph(graph)}"
        if not _graphs.is_bipartite_with_parts(graph, certificate.parts):
            return f"证书划分下不是二部图: {_describe_graph(graph)}"
        if not _path_proximinal.verify_path_proximinal(graph, certificate.parts, certificate.space):
            return f"超度量证书未通过校验: {_describe_graph(graph)}"
        return None
    space, parts = instance
    threshold_graph = _path_proximinal.build_threshold_graph(space, parts)
    if not _graphs.is_bipartite_with_parts(threshold_graph, parts):
        return None
    if not _path_proximinal.verify_path_proximinal(threshold_graph, parts, space):
        return None
    if not _path_proximinal.all_components_two_vertices(threshold_graph):
        return f"超度量路径邻近二部图有分支不是两个顶点: {_describe_space(space)} {_describe_parts(parts)}"
    return None


def check_two_vertex_components(graph: SimpleGraph) -> Optional[str]:
    two = _path_proximinal.all_components_two_vertices(graph)
    if two != _path_proximinal.all_degrees_one(graph):
        return f"分支均为两个顶点={two} 与度数全为一不一致: {_describe_graph(graph)}"
    return None


def check_ultrametric_connectivity(
    instance: Tuple[SimpleGraph, Bipartition, FiniteSemimetricSpace],
) -> Optional[str]:
    graph, parts, space = instance
    statements = _path_proximinal.ultrametric_connectivity_statements(graph, parts, space)
    if len(set(statements)) != 1:
        return f"四条陈述为 {statements}: {_describe_graph(graph)} {_describe_parts(parts)}"
    return None


# ==================== 注册表 ====================
SWEEPS: Dict[str, Sweep] = {
    sweep.name: sweep
    for sweep in [
        Sweep("be-path-union", "路径二部 ⇔ 全部 be-路径的并等于 G", _partitioned_family, check_be_path_union),
        Sweep(
            "bpath-components",
            "分支判据的 B_path 等于穷举的 B_path；(a,b) ∈ B_path ⇔ A1×B1 ⊆ B_path",
            _partitioned_family,
            check_bpath_components,
        ),
        Sweep("quotient-completeness", "路径完全 ⇔ 商图完全二部", _partitioned_family, check_quotient_completeness),
        Sweep(
            "singleton-part-completeness",
            "有单点部分的路径二部图：连通 ⇔ 路径完全",
            _partitioned_family,
            check_singleton_part_completeness,
        ),
        Sweep("pruned-partition", "存在路径二部划分 ⇔ G = G′；构造划分可校验", _graph_family, check_pruned_partition),
        Sweep("universal-partition", "每个覆盖划分都路径二部 ⇔ 连通且 G = G′", _graph_family, check_universal_partition),
        Sweep("complete-bipartite", "二部图：路径二部且路径完全 ⇔ 完全二部", _partitioned_family, check_complete_bipartite),
        Sweep("union-decomposition", "G = G[A] ∪ G[B] ∪ G[A,B]；连通的并仍连通", _partitioned_family, check_union_decomposition),
        Sweep("proximinal-witness", "非空二部图在见证度量下是邻近图", _bipartite_family, check_proximinal_witness),
        Sweep(
            "isolated-vertex-certificate",
            "路径邻近证书存在 ⇔ 无孤立点；证书可校验",
            _graph_family,
            check_isolated_vertex_certificate,
        ),
        Sweep(
            "ultrametric-diameter",
            "超度量空间中直径判据两条陈述一致",
            _classified_ultrametric_family,
            check_ultrametric_diameter,
        ),
        Sweep("structural-conditions", "结构判据 ⇔ 阈值图路径二部", _semimetric_family, check_structural_conditions),
        Sweep("positive-distance", "路径邻近 ⇒ dist > 0 且存在最佳邻近对", _semimetric_family, check_positive_distance),
        Sweep("full-projection", "邻近图：A0 = A 且 B0 = B ⇔ 无孤立点", _bipartite_family, check_full_projection),
        Sweep(
            "within-part-separation",
            "G = G′ 的邻近图：路径邻近 ⇔ 部分内距离严格大于 dist(A,B)",
            _separation_family,
            check_within_part_separation,
        ),
        Sweep(
            "degree-one-ultrametric",
            "超度量证书存在 ⇔ 度数全为一；随机超度量空间上的逆命题",
            _degree_one_family,
            check_degree_one_ultrametric,
        ),
        Sweep("two-vertex-components", "分支均为两个顶点 ⇔ 度数全为一", _graph_family, check_two_vertex_components),
        Sweep(
            "ultrametric-connectivity",
            "超度量路径邻近二部图上四条连通性陈述两两等价",
            _ultrametric_certificate_family,
            check_ultrametric_connectivity,
        ),
    ]
}


# ==================== 并行执行 ====================
def _check_chunk(check: Callable[[Any], Optional[str]], chunk: List[Any]) -> List[Optional[str]]:
    return [check(instance) for instance in chunk]


def ordered_chunk_map(
    executor: Executor,
    check: Callable[[Any], Optional[str]],
    family: Iterator[Any],
    chunk_size: int,
    window: int,
) -> Iterator[Optional[str]]:
    """按实例顺序产出检查结果；任一时刻最多 window 个分块在途，实例族按需读取"""
    instances = iter(family)
    pending: deque = deque()

    def submit_next() -> None:
        chunk = list(islice(instances, chunk_size))
        if chunk:
            pending.append(executor.submit(_check_chunk, check, chunk))

    for _ in range(window):
        submit_next()
    while pending:
        outcomes = pending.popleft().result()
        submit_next()
        yield from outcomes


class VerificationService:
    """按名字运行校验扫描

    职责：
    - 校验上界（穷举顶点数不超过 PROXIGRAPH_MAX_N）
    - 顺序或按进程池检查实例，结果按实例顺序消费
    - 每 PROXIGRAPH_PROGRESS_EVERY 个实例记录一次进度，遇到第一个反例即停止
    """

    DEFAULT_INSTANCES = 1000

    def names(self) -> List[str]:
        return sorted(SWEEPS)

    def get(self, name: str) -> Sweep:
        sweep = SWEEPS.get(name)
        if sweep is None:
            raise PreconditionError(
                f"未知扫描: {name}（可选: {', '.join(self.names())}）", code="unknown-sweep"
            )
        return sweep

    def _bounds(self, max_n: Optional[int], instances: Optional[int], seed: int) -> SweepBounds:
        settings.check_bounds()
        limit = settings.PROXIGRAPH_MAX_N
        max_n = limit if max_n is None else max_n
        if not 1 <= max_n <= limit:
            raise BoundExceededError(f"--max-n 需在 1..{limit} 之间: {max_n}", code="bound-exceeded")
        instances = self.DEFAULT_INSTANCES if instances is None else instances
        if instances < 0:
            raise BoundExceededError(f"--instances 不能为负: {instances}", code="bound-exceeded")
        return SweepBounds(max_n=max_n, instances=instances, seed=seed)

    def run(
        self,
        name: str,
        max_n: Optional[int] = None,
        instances: Optional[int] = None,
        seed: int = 0,
        jobs: int = 1,
    ) -> SweepReport:
        sweep = self.get(name)
        bounds = self._bounds(max_n, instances, seed)
        if jobs < 1:
            raise BoundExceededError(f"--jobs 至少为 1: {jobs}", code="bound-exceeded")
        parameters = {"max_n": bounds.max_n, "instances": bounds.instances, "seed": seed, "jobs": jobs}
        logger.info(f"开始扫描 {name}: {sweep.statement} {parameters}")

        every = settings.PROXIGRAPH_PROGRESS_EVERY
        checked = 0
        counterexample = None
        family = sweep.family(bounds)

        if jobs == 1:
            results = map(sweep.check, family)
            executor = None
        else:
            executor = ProcessPoolExecutor(max_workers=jobs)
            results = ordered_chunk_map(
                executor, sweep.check, family, PARALLEL_CHUNK_SIZE, jobs * PARALLEL_CHUNKS_PER_JOB
            )
        try:
            for outcome in results:
                checked += 1
                if every > 0 and checked % every == 0:
                    logger.info(f"{name}: 已检查 {checked} 个实例")
                if outcome is not None:
                    counterexample = outcome
                    logger.warning(f"{name}: 发现反例 {outcome}")
                    break
        finally:
            if executor is not None:
                executor.shutdown(cancel_futures=True)

        logger.info(f"扫描 {name} 结束: 检查 {checked} 个实例")
        return SweepReport(
            sweep=name, checked=checked, counterexample=counterexample, parameters=parameters
        )

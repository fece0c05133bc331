"""
[INPUT]: 依赖 proxigraph.repositories 的文件仓储，依赖 proxigraph.services 的全部领域服务，依赖 rich.console 的 Console
[OUTPUT]: 对外提供 ProxigraphClient 类（加载文件 + 调用服务 + 组装 CommandResult）与 emit/run_command 输出工具
[POS]: cli 的服务门面，被所有 commands 模块消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path
from typing import Callable, List, Optional, Tuple
import json
import logging

import typer
from pydantic import ValidationError
from rich.console import Console

from proxigraph.core.exceptions import BaseError, PreconditionError
from proxigraph.models import (
    Bipartition,
    CommandResult,
    FiniteSemimetricSpace,
    SimpleGraph,
    SpaceClass,
    TruncationParams,
)
from proxigraph.repositories import (
    CertificateRepository,
    DotExporter,
    GraphRepository,
    PartitionRepository,
    SpaceRepository,
)
from proxigraph.services import (
    CatalogService,
    GraphService,
    MetricService,
    PathProximinalService,
    PathStructureService,
    ProximinalGraphService,
    VerificationService,
)

logger = logging.getLogger(__name__)

console = Console(soft_wrap=True)

# 见证构造的前置条件失败时退出码为 1
WITNESS_PRECONDITIONS = {"not-path-bipartite", "not-degree-one", "empty-graph", "not-bipartite-with-parts"}


# ==================== 输出 ====================
def emit(result: CommandResult) -> None:
    """首行是机器可读结论，其后是诊断；非零退出码通过 typer.Exit 返回"""
    console.print(result.verdict_line(), markup=False, highlight=False)
    for line in result.diagnostics:
        console.print(line, markup=False, highlight=False)
    code = result.resolved_exit_code()
    if code:
        raise typer.Exit(code)


def run_command(action: Callable[[], CommandResult]) -> None:
    """执行命令；输入或格式错误统一以 error 为首行、退出码 2 结束"""
    try:
        result = action()
    except BaseError as e:
        logger.debug(f"命令失败: {e}")
        result = CommandResult(verdict="error", diagnostics=[str(e)], exit_code=2)
    except ValidationError as e:
        result = CommandResult(verdict="error", diagnostics=[f"invalid-argument: {e.errors()[0]['msg']}"], exit_code=2)
    emit(result)


def _format_pairs(pairs) -> str:
    return json.dumps([list(pair) for pair in sorted(pairs)], ensure_ascii=False)


class ProxigraphClient:
    """命令行门面

    每个方法对应一个命令：读入文件、调用服务、返回 CommandResult。
    """

    def __init__(self):
        self.graph_files = GraphRepository()
        self.partition_files = PartitionRepository()
        self.space_files = SpaceRepository()
        self.certificate_files = CertificateRepository()
        self.dot = DotExporter()

        self.graphs = GraphService()
        self.metrics = MetricService()
        self.paths = PathStructureService(self.graphs)
        self.proximinal = ProximinalGraphService(self.graphs, self.metrics)
        self.path_proximinal = PathProximinalService(self.graphs, self.metrics)
        self.verification = VerificationService()
        self.catalog = CatalogService()

    # ==================== 加载 ====================
    def _load_graph_and_parts(self, graph_file: Path, partition_file: Path) -> Tuple[SimpleGraph, Bipartition]:
        graph = self.graph_files.load(graph_file)
        parts = self.partition_files.load(partition_file)
        if parts.union() != graph.vertices:
            diff = sorted(parts.union() ^ graph.vertices)
            raise PreconditionError(
                f"划分文件与图文件的顶点集不一致: {', '.join(diff)}", code="vertex-mismatch"
            )
        return graph, parts

    def _require_space(self, space_file: Optional[Path], kind: str) -> FiniteSemimetricSpace:
        if space_file is None:
            raise PreconditionError(f"{kind} 需要 --space 文件", code="missing-space-file")
        return self.space_files.load(space_file)

    # ==================== classify ====================
    def classify(self, space_file: Path) -> CommandResult:
        space = self.space_files.load(space_file)
        space_class = self.metrics.classify(space)
        diagnostics = [f"points: {len(space)}"]
        if space_class is not SpaceClass.ULTRAMETRIC:
            a, b, c = self.metrics.strong_triangle_violation(space)
            diagnostics.append(f"强三角不等式不成立: d({a},{b}) > max(d({a},{c}), d({c},{b}))")
        if space_class is SpaceClass.SEMIMETRIC:
            a, b, c = self.metrics.triangle_violation(space)
            diagnostics.append(f"三角不等式不成立: d({a},{b}) > d({a},{c}) + d({c},{b})")
        return CommandResult(verdict=space_class.value, diagnostics=diagnostics)

    # ==================== check ====================
    def check(
        self, kind: str, graph_file: Path, partition_file: Path, space_file: Optional[Path] = None
    ) -> CommandResult:
        graph, parts = self._load_graph_and_parts(graph_file, partition_file)
        if kind == "path-bipartite":
            reason = self.paths.path_bipartite_violation(graph, parts)
            return CommandResult(
                verdict=reason is None,
                diagnostics=[reason or "每个连通分支都与 A、B 相交"],
            )
        if kind == "path-complete":
            bpath = self.paths.bpath_pairs(graph, parts)
            missing = sorted((a, b) for a in parts.a for b in parts.b if (a, b) not in bpath)
            diagnostics = [f"|B_path| = {len(bpath)}, |A × B| = {len(parts.a) * len(parts.b)}"]
            if missing:
                diagnostics.append(f"不在 B_path 中: {_format_pairs(missing)}")
            return CommandResult(verdict=not missing, diagnostics=diagnostics)

        space = self._require_space(space_file, kind)
        report = self.metrics.proximity_report(space, parts)
        diagnostics = [f"dist(A, B) = {report.distance}"]
        if kind == "proximinal":
            verdict = self.proximinal.verify_proximinal_graph(graph, parts, space)
            expected = self.proximinal.build_proximinal_graph(space, parts)
        else:
            verdict = self.path_proximinal.verify_path_proximinal(graph, parts, space)
            expected = self.path_proximinal.build_threshold_graph(space, parts)
            reason = self.paths.path_bipartite_violation(graph, parts)
            if reason:
                diagnostics.append(f"不是路径二部图: {reason}")
        extra = sorted(graph.edges - expected.edges)
        absent = sorted(expected.edges - graph.edges)
        if extra:
            diagnostics.append(f"多出的边: {_format_pairs(extra)}")
        if absent:
            diagnostics.append(f"缺少的边: {_format_pairs(absent)}")
        return CommandResult(verdict=verdict, diagnostics=diagnostics)

    # ==================== bpath ====================
    def bpath(
        self,
        graph_file: Path,
        partition_file: Path,
        witness: Optional[Tuple[str, str]] = None,
        quotient: bool = False,
    ) -> CommandResult:
        graph, parts = self._load_graph_and_parts(graph_file, partition_file)
        pairs = self.paths.bpath_pairs(graph, parts)
        result = CommandResult(verdict=len(pairs), diagnostics=[_format_pairs(pairs)])
        if witness is not None:
            a, b = witness
            be_path = self.paths.be_path_witness(graph, parts, a, b)
            if be_path is None:
                result.diagnostics.append(f"pair-not-in-bpath: ({a}, {b}) 之间没有 be-路径")
                result.exit_code = 1
            else:
                result.diagnostics.append(" ".join(be_path.path.order))
        if quotient:
            result.diagnostics.append(self.dot.render_quotient(self.paths.quotient_graph(graph, parts)).rstrip())
        return result

    # ==================== witness ====================
    def witness(
        self, kind: str, graph_file: Path, partition_file: Optional[Path], out: Path
    ) -> CommandResult:
        graph = self.graph_files.load(graph_file)
        try:
            if kind == "ultrametric":
                return self._ultrametric_witness(graph, out)
            if partition_file is None:
                raise PreconditionError(f"{kind} 需要 --partition 文件", code="missing-partition-file")
            graph, parts = self._load_graph_and_parts(graph_file, partition_file)
            if kind == "metric":
                space = self.path_proximinal.witness_metric_for_path_bipartite(graph, parts)
                verified = self.path_proximinal.verify_path_proximinal(graph, parts, space)
            else:
                space = self.proximinal.witness_proximinal_metric(graph, parts)
                verified = self.proximinal.verify_proximinal_graph(graph, parts, space)
        except PreconditionError as e:
            if e.code not in WITNESS_PRECONDITIONS:
                raise
            return CommandResult(verdict=False, diagnostics=[str(e)], exit_code=1)

        self.space_files.save(space, out)
        return CommandResult(
            verdict=verified,
            witness=str(out),
            diagnostics=[
                f"witness: {out}",
                f"class: {self.metrics.classify(space).value}",
                f"dist(A, B) = {self.metrics.set_distance(space, parts.a, parts.b)}",
            ],
        )

    def _ultrametric_witness(self, graph: SimpleGraph, out: Path) -> CommandResult:
        certificate = self.path_proximinal.witness_ultrametric(graph)
        if certificate is None:
            bad = sorted(v for v in graph.vertices if self.graphs.degree(graph, v) != 1)
            raise PreconditionError(
                f"以下顶点的度数不为 1: {', '.join(bad) or '（空图）'}", code="not-degree-one"
            )
        space_class = self.metrics.classify(certificate.space)
        verified = space_class is SpaceClass.ULTRAMETRIC and self.path_proximinal.verify_path_proximinal(
            certificate.graph, certificate.parts, certificate.space
        )
        self.certificate_files.save(certificate, out)
        return CommandResult(
            verdict=verified,
            witness=str(out),
            diagnostics=[
                f"witness: {out}",
                f"class: {space_class.value}",
                f"A = {sorted(certificate.parts.a)}",
                f"B = {sorted(certificate.parts.b)}",
            ],
        )

    # ==================== verify ====================
    def verify(
        self, name: str, max_n: Optional[int], instances: Optional[int], seed: int, jobs: int
    ) -> CommandResult:
        report = self.verification.run(name, max_n=max_n, instances=instances, seed=seed, jobs=jobs)
        diagnostics = [f"sweep: {report.sweep}", f"checked: {report.checked}"]
        diagnostics.extend(f"{key}: {value}" for key, value in report.parameters.items())
        if report.counterexample:
            diagnostics.append(f"counterexample: {report.counterexample}")
        return CommandResult(verdict=report.passed, diagnostics=diagnostics)

    # ==================== example ====================
    def example(self, name: str, out_dir: Optional[Path], params: TruncationParams) -> CommandResult:
        bundle = self.catalog.build_bundle(name, params)
        lines: List[str] = [
            f"[{'✓' if claim.holds else '✗'}] {claim.statement}: {claim.observed}"
            for claim in bundle.claims
        ]
        lines.extend(f"勘误: {note}" for note in bundle.errata)
        written: List[str] = []
        if out_dir is not None:
            if bundle.graph is not None:
                written.append(str(self.graph_files.save(bundle.graph, out_dir / "graph.json")))
            if bundle.parts is not None:
                written.append(str(self.partition_files.save(bundle.parts, out_dir / "partition.json")))
            if bundle.space is not None:
                written.append(str(self.space_files.save(bundle.space, out_dir / "space.json")))
            report = out_dir / "report.txt"
            report.write_text("\n".join(lines) + "\n", encoding="utf-8")
            written.append(str(report))
        lines.extend(f"wrote: {path}" for path in written)
        return CommandResult(verdict=bundle.all_hold(), diagnostics=lines)

    # ==================== export-dot ====================
    def export_dot(self, graph_file: Path, partition_file: Optional[Path], out: Optional[Path]) -> CommandResult:
        graph = self.graph_files.load(graph_file)
        parts = None
        if partition_file is not None:
            graph, parts = self._load_graph_and_parts(graph_file, partition_file)
        text = self.dot.render_graph(graph, parts)
        if out is None:
            return CommandResult(verdict=True, diagnostics=[text.rstrip()])
        self.dot.save(text, out)
        return CommandResult(verdict=True, witness=str(out), diagnostics=[f"wrote: {out}"])

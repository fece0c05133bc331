"""
[INPUT]: 依赖 pathlib 的 Path，依赖 proxigraph.models 的 SimpleGraph/Bipartition/QuotientGraph
[OUTPUT]: 对外提供 DotExporter 类，把图与商图渲染为 DOT 文本（只写）
[POS]: proxigraph/repositories 的 DOT 导出，被 cli 的 export-dot 与 bpath --quotient 消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pathlib import Path
from typing import List, Optional, Union
import logging

from ..models.graph import Bipartition, SimpleGraph
from ..models.path import QuotientGraph

logger = logging.getLogger(__name__)

PART_COLORS = {"A": "lightblue", "B": "lightsalmon"}


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


class DotExporter:
    """DOT 渲染：顶点按标号顺序，标号原样输出"""

    def render_graph(self, graph: SimpleGraph, parts: Optional[Bipartition] = None) -> str:
        lines: List[str] = ["graph G {"]
        for v in graph.sorted_vertices():
            side = parts.side(v) if parts is not None else None
            if side is None:
                lines.append(f"  {_quote(v)};")
            else:
                lines.append(
                    f"  {_quote(v)} [part={side}, style=filled, fillcolor={PART_COLORS[side]}];"
                )
        for u, v in graph.sorted_edges():
            lines.append(f"  {_quote(u)} -- {_quote(v)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def render_quotient(self, quotient: QuotientGraph) -> str:
        """分支 id 为顶点，label 列出分支成员"""
        lines: List[str] = ["graph Q {"]
        for component_id in quotient.a_ids() + quotient.b_ids():
            members = ",".join(sorted(quotient.members(component_id)))
            side = component_id[0]
            lines.append(
                f"  {_quote(component_id)} [label={_quote(f'{component_id}: {members}')}, "
                f"part={side}, style=filled, fillcolor={PART_COLORS[side]}];"
            )
        for a_id, b_id in sorted(quotient.edges):
            lines.append(f"  {_quote(a_id)} -- {_quote(b_id)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def save(self, text: str, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.debug(f"写出 DOT: {path}")
        return path

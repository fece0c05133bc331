"""
[INPUT]: 依赖 proxigraph.repositories.base 的 BaseRepository，依赖 proxigraph.services.graph 的 GraphService
[OUTPUT]: 对外提供 GraphRepository 类，读写 {"vertices": [...], "edges": [[u, v], ...]}
[POS]: proxigraph/repositories 的图文件仓储，被 cli 与证书仓储消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Any, Dict, Optional

from .base import BaseRepository
from ..models.graph import SimpleGraph
from ..services.graph import GraphService
from ..core.exceptions import MalformedDocumentError


class GraphRepository(BaseRepository[SimpleGraph]):
    """图文件仓储"""

    document_name = "graph"

    def __init__(self, graphs: Optional[GraphService] = None):
        self.graphs = graphs or GraphService()

    def _to_model(self, doc: Any) -> SimpleGraph:
        doc = self._require_object(doc, ["vertices", "edges"])
        vertices = self._require_string_list(doc["vertices"], "vertices")
        edges = doc["edges"]
        if not isinstance(edges, list):
            raise MalformedDocumentError("字段 edges 应为列表")
        for edge in edges:
            if not isinstance(edge, list) or len(edge) != 2:
                raise MalformedDocumentError(f"边应为两个标号组成的列表: {edge!r}")
        return self.graphs.build_graph(vertices, edges)

    def _to_document(self, graph: SimpleGraph) -> Dict[str, Any]:
        return {
            "vertices": graph.sorted_vertices(),
            "edges": [list(edge) for edge in graph.sorted_edges()],
        }

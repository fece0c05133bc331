"""
[INPUT]: 依赖 proxigraph.repositories.base 的 BaseRepository，依赖 proxigraph.models.graph 的 Bipartition
[OUTPUT]: 对外提供 PartitionRepository 类，读写 {"A": [...], "B": [...]}
[POS]: proxigraph/repositories 的划分文件仓储，被 cli 与证书仓储消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Any, Dict

from .base import BaseRepository
from ..models.graph import Bipartition, check_label


class PartitionRepository(BaseRepository[Bipartition]):
    """划分文件仓储"""

    document_name = "partition"

    def _to_model(self, doc: Any) -> Bipartition:
        doc = self._require_object(doc, ["A", "B"])
        a = self._require_string_list(doc["A"], "A")
        b = self._require_string_list(doc["B"], "B")
        for label in a + b:
            check_label(label)
        return Bipartition(a=frozenset(a), b=frozenset(b))

    def _to_document(self, parts: Bipartition) -> Dict[str, Any]:
        return {"A": sorted(parts.a), "B": sorted(parts.b)}

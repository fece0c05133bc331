"""
[INPUT]: 依赖 proxigraph.repositories 的 Graph/Partition/SpaceRepository，依赖 proxigraph.models.certificate 的证书模型
[OUTPUT]: 对外提供 CertificateRepository 类，读写 {"kind", "graph", "partition", "space"} 证书包
[POS]: proxigraph/repositories 的证书仓储，被 cli 的 witness 命令消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Any, Dict, Union

from .base import BaseRepository
from .graph import GraphRepository
from .partition import PartitionRepository
from .space import SpaceRepository
from ..models.certificate import PathProximinalCertificate, ProximinalGraphCertificate
from ..core.exceptions import MalformedDocumentError

Certificate = Union[ProximinalGraphCertificate, PathProximinalCertificate]

CERTIFICATE_KINDS = {
    "proximinal": ProximinalGraphCertificate,
    "path-proximinal": PathProximinalCertificate,
}


class CertificateRepository(BaseRepository[Certificate]):
    """证书包仓储，三个部分复用各自的文件格式"""

    document_name = "certificate"

    def __init__(self):
        self.graphs = GraphRepository()
        self.partitions = PartitionRepository()
        self.spaces = SpaceRepository()

    def _to_model(self, doc: Any) -> Certificate:
        doc = self._require_object(doc, ["kind", "graph", "partition", "space"])
        model = CERTIFICATE_KINDS.get(doc["kind"])
        if model is None:
            raise MalformedDocumentError(
                f"未知证书类型: {doc['kind']!r}（可选: {', '.join(CERTIFICATE_KINDS)}）"
            )
        return model(
            graph=self.graphs.parse(doc["graph"]),
            parts=self.partitions.parse(doc["partition"]),
            space=self.spaces.parse(doc["space"]),
        )

    def _to_document(self, certificate: Certificate) -> Dict[str, Any]:
        return {
            "kind": certificate.kind,
            "graph": self.graphs.dump(certificate.graph),
            "partition": self.partitions.dump(certificate.parts),
            "space": self.spaces.dump(certificate.space),
        }

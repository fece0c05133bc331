"""
proxigraph.repositories - 文件读写层模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from .base import BaseRepository
from .graph import GraphRepository
from .partition import PartitionRepository
from .space import SpaceRepository, parse_rational, format_rational
from .certificate import CertificateRepository
from .dot import DotExporter

__all__ = [
    "BaseRepository",
    "GraphRepository",
    "PartitionRepository",
    "SpaceRepository",
    "parse_rational",
    "format_rational",
    "CertificateRepository",
    "DotExporter",
]

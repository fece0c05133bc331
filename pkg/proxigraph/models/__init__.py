"""
proxigraph.models - Pydantic 数据模型模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from .graph import SimpleGraph, PathSeq, Bipartition, Edge, normalize_edge
from .space import SpaceClass, FiniteSemimetricSpace, ProximityReport, to_rational
from .path import BePathWitness, QuotientGraph
from .certificate import ProximinalGraphCertificate, PathProximinalCertificate, TruncationParams
from .catalog import Claim, Bundle
from .command import CommandResult, SweepReport

__all__ = [
    "SimpleGraph",
    "PathSeq",
    "Bipartition",
    "Edge",
    "normalize_edge",
    "SpaceClass",
    "FiniteSemimetricSpace",
    "ProximityReport",
    "to_rational",
    "BePathWitness",
    "QuotientGraph",
    "ProximinalGraphCertificate",
    "PathProximinalCertificate",
    "TruncationParams",
    "Claim",
    "Bundle",
    "CommandResult",
    "SweepReport",
]

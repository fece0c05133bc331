"""
proxigraph.services - 业务逻辑层模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from .graph import GraphService
from .metric import MetricService
from .proximinal import ProximinalGraphService
from .path import PathStructureService
from .path_proximinal import PathProximinalService
from .instances import InstanceService
from .verification import VerificationService, SWEEPS
from .catalog import CatalogService

__all__ = [
    "GraphService",
    "MetricService",
    "ProximinalGraphService",
    "PathStructureService",
    "PathProximinalService",
    "InstanceService",
    "VerificationService",
    "SWEEPS",
    "CatalogService",
]

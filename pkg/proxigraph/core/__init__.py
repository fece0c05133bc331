"""
proxigraph.core - 核心配置与基础设施模块

[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from .config import settings, Settings, HARD_MAX_N
from .exceptions import (
    BaseError,
    RepositoryError,
    DocumentNotFoundError,
    MalformedDocumentError,
    BusinessError,
    InvalidGraphError,
    InvalidSpaceError,
    InvalidPartitionError,
    InvalidPathError,
    PreconditionError,
    BoundExceededError,
)

__all__ = [
    "settings",
    "Settings",
    "HARD_MAX_N",
    "BaseError",
    "RepositoryError",
    "DocumentNotFoundError",
    "MalformedDocumentError",
    "BusinessError",
    "InvalidGraphError",
    "InvalidSpaceError",
    "InvalidPartitionError",
    "InvalidPathError",
    "PreconditionError",
    "BoundExceededError",
]

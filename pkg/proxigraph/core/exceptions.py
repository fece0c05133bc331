"""
[INPUT]: 无外部依赖
[OUTPUT]: 对外提供自定义异常类型（BaseError/RepositoryError/BusinessError 及其子类）
[POS]: proxigraph/core 的异常定义模块，被所有需要抛出领域异常的模块消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from typing import Optional


# ==================== 基础异常 ====================
class BaseError(Exception):
    """所有自定义异常的父类

    code 为机器可读的错误名（如 loop-edge），message 点名出错的标记。
    """

    code: str = "error"

    def __init__(self, message: str, code: Optional[str] = None):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


# ==================== Repository 层异常 ====================
class RepositoryError(BaseError):
    """文件读写失败"""

    code = "repository-error"


class DocumentNotFoundError(RepositoryError):
    """文件不存在或不可读"""

    code = "document-not-found"


class MalformedDocumentError(RepositoryError):
    """文件内容格式错误（JSON、字段形状、有理数写法）"""

    code = "malformed-document"


# ==================== Service 层异常 ====================
class BusinessError(BaseError):
    """领域逻辑错误"""

    code = "business-error"


class InvalidGraphError(BusinessError):
    """图结构非法（重复顶点、自环、未知端点等）"""

    code = "invalid-graph"


class InvalidSpaceError(BusinessError):
    """距离表不满足半度量公理"""

    code = "invalid-space"


class InvalidPartitionError(BusinessError):
    """二部划分非法（相交、空部分、未覆盖）"""

    code = "invalid-partition"


class InvalidPathError(BusinessError):
    """顶点序列不是宿主图中的路径"""

    code = "not-a-path"


class PreconditionError(BusinessError):
    """操作前置条件不成立（如非超度量、非路径二部）"""

    code = "precondition-violation"


class BoundExceededError(BusinessError):
    """实例规模超出配置上界"""

    code = "size-exceeded"

"""
[INPUT]: 依赖 json 与 pathlib 的文件读写，依赖 pydantic 的 ValidationError，依赖 typing 的泛型
[OUTPUT]: 对外提供 BaseRepository 抽象类，定义 JSON 文档与模型之间的 load/save/parse/dump
[POS]: proxigraph/repositories 的基类，被所有具体 Repository 继承
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Generic, List, TypeVar, Union
import json
import logging

from pydantic import ValidationError

from ..core.exceptions import DocumentNotFoundError, MalformedDocumentError

logger = logging.getLogger(__name__)

T = TypeVar("T")

PathLike = Union[str, Path]


class BaseRepository(ABC, Generic[T]):
    """JSON 文档仓储基类

    设计：
    - load/save 负责文件，parse/dump 负责文档 ↔ 模型
    - 子类只实现 _to_model 与 _to_document
    - 文档形状错误统一转换为 MalformedDocumentError，领域校验错误原样抛出
    """

    document_name: str = "document"

    def load(self, path: PathLike) -> T:
        """读取并解析文件"""
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise DocumentNotFoundError(f"无法读取 {self.document_name} 文件 {path}: {e.strerror}")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedDocumentError(f"{path} 不是合法 JSON: 第 {e.lineno} 行 {e.msg}")
        logger.debug(f"读取 {self.document_name}: {path}")
        return self.parse(doc)

    def save(self, obj: T, path: PathLike) -> Path:
        """写出文件，必要时创建目录"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.dump(obj), ensure_ascii=False, indent=2) + "\n", encoding="utf-8")
        logger.debug(f"写出 {self.document_name}: {path}")
        return path

    def parse(self, doc: Any) -> T:
        try:
            return self._to_model(doc)
        except ValidationError as e:
            raise MalformedDocumentError(f"{self.document_name} 字段不合法: {e.errors()[0]['msg']}")
        except (KeyError, TypeError) as e:
            raise MalformedDocumentError(f"{self.document_name} 文档形状不对: {e}")

    def dump(self, obj: T) -> Dict[str, Any]:
        return self._to_document(obj)

    # ==================== 形状检查工具 ====================
    def _require_object(self, doc: Any, keys: List[str]) -> Dict[str, Any]:
        if not isinstance(doc, dict):
            raise MalformedDocumentError(f"{self.document_name} 应为 JSON 对象")
        missing = [key for key in keys if key not in doc]
        if missing:
            raise MalformedDocumentError(f"{self.document_name} 缺少字段: {', '.join(missing)}")
        return doc

    def _require_string_list(self, value: Any, field: str) -> List[str]:
        if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
            raise MalformedDocumentError(f"字段 {field} 应为字符串列表")
        return value

    @abstractmethod
    def _to_model(self, doc: Any) -> T:
        """JSON 文档 → 模型"""

    @abstractmethod
    def _to_document(self, obj: T) -> Dict[str, Any]:
        """模型 → JSON 文档"""

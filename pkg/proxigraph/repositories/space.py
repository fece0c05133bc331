"""
[INPUT]: 依赖 proxigraph.repositories.base 的 BaseRepository，依赖 fractions 的 Fraction，依赖 proxigraph.models.space 的 FiniteSemimetricSpace
[OUTPUT]: 对外提供 SpaceRepository 类与 parse_rational/format_rational 工具函数
[POS]: proxigraph/repositories 的空间文件仓储，被 cli 与证书仓储消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from fractions import Fraction
from typing import Any, Dict, Union
import re

from .base import BaseRepository
from ..models.space import FiniteSemimetricSpace
from ..core.exceptions import MalformedDocumentError

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(value: Any) -> Fraction:
    """整数或 "p/q" 文本 → Fraction；浮点、布尔与其他写法一律拒绝"""
    if isinstance(value, bool):
        raise MalformedDocumentError(f"非法距离值: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str) and RATIONAL_PATTERN.match(value):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise MalformedDocumentError(f"分母为零: {value!r}")
    raise MalformedDocumentError(f"非法距离值: {value!r}（只接受整数或 \"p/q\"）")


def format_rational(value: Fraction) -> Union[int, str]:
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


class SpaceRepository(BaseRepository[FiniteSemimetricSpace]):
    """空间文件仓储：{"points": [...], "distances": [[...], ...]}"""

    document_name = "space"

    def _to_model(self, doc: Any) -> FiniteSemimetricSpace:
        doc = self._require_object(doc, ["points", "distances"])
        points = self._require_string_list(doc["points"], "points")
        rows = doc["distances"]
        if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
            raise MalformedDocumentError("字段 distances 应为二维列表")
        if len(rows) != len(points) or any(len(row) != len(points) for row in rows):
            raise MalformedDocumentError(f"distances 必须是 {len(points)}×{len(points)} 方阵")
        table = [[parse_rational(entry) for entry in row] for row in rows]
        return FiniteSemimetricSpace(points=tuple(points), table=table)

    def _to_document(self, space: FiniteSemimetricSpace) -> Dict[str, Any]:
        return {
            "points": list(space.points),
            "distances": [[format_rational(d) for d in row] for row in space.table],
        }

"""
Вывод результатов: JSON (канонический), таблицы весов.

JSON печатается компактно, ключи в порядке построения: вывод побайтно
совпадает при одинаковых флагах и seed.
"""

import json
import logging
from typing import Any, Iterable, Optional

from algebra import Coefficient
from objects import ASTrapezoid, HalvedPattern, WeightMonomial

logger = logging.getLogger(__name__)


def dumps(payload: Any) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False, default=_default)


def _default(value: Any) -> Any:
    if isinstance(value, Coefficient):
        return value.to_json()
    raise TypeError(f"Не сериализуется в JSON: {type(value).__name__}")


def coefficient_json(value: Coefficient) -> str:
    return dumps(value.to_json())


def weight_json(weight: Optional[WeightMonomial]) -> Optional[dict]:
    if weight is None:
        return None
    return {"q": weight.q_exp, "p": weight.p_exp}


def object_json(obj: Any, weight: Optional[WeightMonomial]) -> str:
    """
    Одна JSON-строка на объект и его вес.

    Трапеция: {"n", "l", "rows"}; схема: {"n", "s", "mode", "rows_bottom_up", "b"}.
    """
    if isinstance(obj, (ASTrapezoid, HalvedPattern)):
        payload = obj.model_dump(mode="json")
    else:
        payload = {"rows": obj}
    payload["weight"] = weight_json(weight)
    return dumps(payload)


def json_lines(items: Iterable[tuple[Any, Optional[WeightMonomial]]]) -> str:
    lines = [object_json(obj, weight) for obj, weight in items]
    logger.debug(f"JSON: {len(lines)} объектов")
    return "\n".join(lines)

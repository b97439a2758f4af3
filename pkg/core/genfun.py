"""
Производящие функции тремя независимыми методами.

Методы:
- bruteforce: перечисление объектов и сумма весов
- operator: операторные формулы
- ct: константные члены

Функции:
- compute_genfun(): диспетчер по виду и методу
- query_from_row(): экземпляр из строки пакетного файла
"""

import logging
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from algebra import Coefficient
from constant_term import (
    ct_qhtree,
    ct_vsast_pq,
    ct_vsast_pq_odd,
    ct_vsast_pqc,
    ct_vsastriangle,
)
from core.models import GenfunKind, Method, MethodUnavailableError
from data import InstanceRow
from objects import (
    InvalidObjectError,
    classify_columns,
    enumerate_as_triangles,
    enumerate_halved_patterns,
    enumerate_vsast,
    genfun_from_list,
)
from operators import (
    qhmt_genfun,
    qhtree_genfun,
    vsast_pq_genfun_op,
    vsast_pqc_genfun_op,
)

logger = logging.getLogger(__name__)


class GenfunQuery(BaseModel):
    """Параметры одной производящей функции"""
    kind: GenfunKind
    n: int = Field(..., ge=1, description="Порядок")
    l: Optional[int] = Field(None, ge=1, description="Длина основания трапеции")
    b: Optional[int] = Field(None, description="Верхняя граница элементов")
    k: list[int] = Field(default_factory=list, description="Нижняя строка k_1…k_m")
    s: list[int] = Field(default_factory=list, description="Вектор усечения дерева")
    c: Optional[list[int]] = Field(None, description="Вектор 1-столбцов (только vsast)")

    @model_validator(mode="after")
    def _check_parameters(self) -> "GenfunQuery":
        if self.kind in (GenfunKind.HMT, GenfunKind.TREE):
            if self.b is None or not self.k:
                raise InvalidObjectError(f"Для {self.kind.value} нужны b и k")
        if self.kind == GenfunKind.HMT and self.s:
            raise InvalidObjectError("У hmt нет вектора усечения; используйте tree")
        if self.kind in (GenfunKind.HMT, GenfunKind.TREE) and len(self.k) != (self.n + 1) // 2:
            raise InvalidObjectError(f"Длина k={self.k} != ⌈n/2⌉={(self.n + 1) // 2}")
        if self.kind == GenfunKind.HMT:
            if any(x >= y for x, y in zip(self.k, self.k[1:])) or self.k[-1] > self.b:
                raise InvalidObjectError(f"Нужна строго возрастающая нижняя строка <= b: k={self.k}, b={self.b}")
        if self.kind == GenfunKind.VSAST and self.l is None:
            raise InvalidObjectError("Для vsast нужна длина основания l")
        if self.kind == GenfunKind.VSAST_ODD:
            if self.n % 2 == 0:
                raise InvalidObjectError(f"vsast-odd: n должно быть нечётным, получено {self.n}")
            if self.l not in (None, 1):
                raise InvalidObjectError("vsast-odd определён только для l = 1")
        if self.kind == GenfunKind.TRIANGLE and self.n % 2 == 0:
            raise InvalidObjectError(f"Симметричных треугольников чётного порядка n={self.n} не бывает")
        if self.c is not None and self.kind != GenfunKind.VSAST:
            raise InvalidObjectError("Вектор c задаётся только для vsast")
        return self

    def describe(self) -> str:
        parts = [f"{self.kind.value} n={self.n}"]
        if self.l is not None:
            parts.append(f"l={self.l}")
        if self.b is not None:
            parts.append(f"b={self.b}")
        if self.k:
            parts.append(f"k={self.k}")
        if self.s:
            parts.append(f"s={self.s}")
        if self.c is not None:
            parts.append(f"c={self.c}")
        return " ".join(parts)


def query_from_row(row: InstanceRow) -> GenfunQuery:
    """Строка пакетного файла -> GenfunQuery (вид проверяется здесь)."""
    return GenfunQuery(kind=GenfunKind(row.kind), n=row.n, l=row.l, b=row.b, k=row.k, s=row.s, c=row.c)


def compute_genfun(query: GenfunQuery, method: Method, memo: Optional[dict] = None) -> Coefficient:
    """
    Производящая функция экземпляра выбранным методом.

    Args:
        query: вид и параметры
        method: bruteforce, operator или ct
        memo: многочлены операторного метода, общие для вызовов одной
            задачи; None — свой словарь на этот вызов

    Returns:
        Coefficient в Z[Q, P] (или Q-многочлен)

    Raises:
        InvalidObjectError: неверные параметры
        ResourceBoundError: превышен бюджет перебора или символьный предел
        MethodUnavailableError: метод неприменим
    """
    logger.debug(f"compute_genfun({query.describe()}, {method.value})")
    handler = _DISPATCH[(query.kind, method)]
    result = handler(query, {} if memo is None else memo)
    logger.info(f"{query.describe()} [{method.value}]: {result}")
    return result


# === HMT и деревья ===

def _hmt_bruteforce(q: GenfunQuery, memo: dict) -> Coefficient:
    # Q-производящая функция: P-вес равных нижних пар не учитывается
    return genfun_from_list(enumerate_halved_patterns(q.n, q.b, q.k, q.s)).substitute(P=1)


def _hmt_operator(q: GenfunQuery, memo: dict) -> Coefficient:
    if q.s:
        return qhtree_genfun(q.n, q.b, q.k, q.s, memo)
    return qhmt_genfun(q.n, q.b, q.k, memo)


def _hmt_ct(q: GenfunQuery, memo: dict) -> Coefficient:
    return ct_qhtree(q.n, q.b, q.k, q.s)


# === Симметричные трапеции ===

def _vsast_bruteforce(q: GenfunQuery, memo: dict) -> Coefficient:
    items = enumerate_vsast(q.n, q.l)
    if q.c is not None:
        items = [(t, w) for t, w in items if classify_columns(t).c == q.c]
    return genfun_from_list(items)


def _require_even(q: GenfunQuery) -> None:
    if q.n % 2:
        raise MethodUnavailableError(
            f"Формулы для VSAST({q.n}, {q.l}) требуют чётного n; для l = 1 используйте vsast-odd"
        )


def _vsast_operator(q: GenfunQuery, memo: dict) -> Coefficient:
    _require_even(q)
    if q.c is not None:
        return vsast_pqc_genfun_op(q.n, q.l, q.c, memo)
    return vsast_pq_genfun_op(q.n, q.l, memo)


def _vsast_ct(q: GenfunQuery, memo: dict) -> Coefficient:
    _require_even(q)
    if q.c is not None:
        return ct_vsast_pqc(q.n, q.l, q.c)
    return ct_vsast_pq(q.n, q.l)


def _vsast_odd_bruteforce(q: GenfunQuery, memo: dict) -> Coefficient:
    return genfun_from_list(enumerate_vsast(q.n, 1))


def _vsast_odd_operator(q: GenfunQuery, memo: dict) -> Coefficient:
    if q.n == 1:
        return Coefficient.const(2)
    # нижний элемент 0 или 1: две копии (n-1, 3)-трапеций
    return vsast_pq_genfun_op(q.n - 1, 3, memo) * 2


def _vsast_odd_ct(q: GenfunQuery, memo: dict) -> Coefficient:
    return ct_vsast_pq_odd(q.n)


def _triangle_bruteforce(q: GenfunQuery, memo: dict) -> Coefficient:
    return genfun_from_list(enumerate_as_triangles(q.n, symmetric=True))


def _triangle_operator(q: GenfunQuery, memo: dict) -> Coefficient:
    if q.n == 1:
        return Coefficient.one()
    return vsast_pq_genfun_op(q.n - 1, 3, memo)


def _triangle_ct(q: GenfunQuery, memo: dict) -> Coefficient:
    return ct_vsastriangle(q.n)


_DISPATCH = {
    (GenfunKind.HMT, Method.BRUTEFORCE): _hmt_bruteforce,
    (GenfunKind.HMT, Method.OPERATOR): _hmt_operator,
    (GenfunKind.HMT, Method.CT): _hmt_ct,
    (GenfunKind.TREE, Method.BRUTEFORCE): _hmt_bruteforce,
    (GenfunKind.TREE, Method.OPERATOR): _hmt_operator,
    (GenfunKind.TREE, Method.CT): _hmt_ct,
    (GenfunKind.VSAST, Method.BRUTEFORCE): _vsast_bruteforce,
    (GenfunKind.VSAST, Method.OPERATOR): _vsast_operator,
    (GenfunKind.VSAST, Method.CT): _vsast_ct,
    (GenfunKind.VSAST_ODD, Method.BRUTEFORCE): _vsast_odd_bruteforce,
    (GenfunKind.VSAST_ODD, Method.OPERATOR): _vsast_odd_operator,
    (GenfunKind.VSAST_ODD, Method.CT): _vsast_odd_ct,
    (GenfunKind.TRIANGLE, Method.BRUTEFORCE): _triangle_bruteforce,
    (GenfunKind.TRIANGLE, Method.OPERATOR): _triangle_operator,
    (GenfunKind.TRIANGLE, Method.CT): _triangle_ct,
}

"""
Дерево операторных выражений и его применение к многочленам.

Листья: Id, Shift (E^p), Fd, Bd, Qfd, QId, QE, ScalarMul.
Узлы: Compose (композиция, применяется справа налево), Sum, Power.

Функции:
- apply_operator(): применение выражения к MultiPoly
- operator_variables(): переменные выражения
- q_strict(), t_operator(): составные операторы формул
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Union

from algebra import Coefficient, MultiPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Id:
    pass


@dataclass(frozen=True)
class Shift:
    """E_var^power"""
    var: str
    power: int = 1


@dataclass(frozen=True)
class Fd:
    """Прямая разность E - Id"""
    var: str


@dataclass(frozen=True)
class Bd:
    """Обратная разность Id - E^-1"""
    var: str


@dataclass(frozen=True)
class Qfd:
    """Q-прямая разность Fd (Id - (1-Q)E)^-1"""
    var: str


@dataclass(frozen=True)
class QId:
    """(Q-1)E + Id"""
    var: str


@dataclass(frozen=True)
class QE:
    """(Q-1)Id + E"""
    var: str


@dataclass(frozen=True)
class ScalarMul:
    coefficient: Coefficient


@dataclass(frozen=True)
class Compose:
    items: tuple


@dataclass(frozen=True)
class Sum:
    items: tuple


@dataclass(frozen=True)
class Power:
    base: "OperatorExpr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError(f"Отрицательная степень оператора: {self.exponent}")


OperatorExpr = Union[Id, Shift, Fd, Bd, Qfd, QId, QE, ScalarMul, Compose, Sum, Power]


def apply_operator(op: OperatorExpr, p: MultiPoly) -> MultiPoly:
    """
    Применяет операторное выражение к многочлену.

    Raises:
        UnknownVariableError: оператор по переменной, которой нет в p
    """
    if isinstance(op, Id):
        return p
    if isinstance(op, Shift):
        return p.shift(op.var, op.power)
    if isinstance(op, Fd):
        return p.shift(op.var, 1) - p
    if isinstance(op, Bd):
        return p - p.shift(op.var, -1)
    if isinstance(op, QId):
        return p.shift(op.var, 1) * (Coefficient.Q() - 1) + p
    if isinstance(op, QE):
        return p * (Coefficient.Q() - 1) + p.shift(op.var, 1)
    if isinstance(op, Qfd):
        return _apply_qfd(op.var, p)
    if isinstance(op, ScalarMul):
        return p * op.coefficient
    if isinstance(op, Compose):
        for item in reversed(op.items):
            p = apply_operator(item, p)
        return p
    if isinstance(op, Sum):
        total = MultiPoly.constant(p.variables, 0)
        for item in op.items:
            total = total + apply_operator(item, p)
        return total
    if isinstance(op, Power):
        for _ in range(op.exponent):
            p = apply_operator(op.base, p)
        return p
    raise TypeError(f"Неизвестный оператор: {op!r}")


def operator_variables(op: OperatorExpr) -> set[str]:
    """Переменные, по которым действует выражение."""
    if isinstance(op, (Shift, Fd, Bd, Qfd, QId, QE)):
        return {op.var}
    if isinstance(op, (Compose, Sum)):
        return set().union(*(operator_variables(item) for item in op.items))
    if isinstance(op, Power):
        return operator_variables(op.base)
    return set()


def _apply_qfd(var: str, p: MultiPoly) -> MultiPoly:
    # Qfd f = Q^-1 sum_i ((1-Q)/Q)^i Fd^{i+1} f; ряд обрывается, когда разность равна нулю
    ratio = (Coefficient.one() - Coefficient.Q()) * Coefficient.Q(-1)
    weight = Coefficient.Q(-1)
    difference = p.shift(var, 1) - p
    total = MultiPoly.constant(p.variables, 0)
    while not difference.is_zero():
        total = total + difference * weight
        weight = weight * ratio
        difference = difference.shift(var, 1) - difference
    return total


# === Составные операторы ===

def q_strict(x: str, y: str) -> OperatorExpr:
    """E_x^-1 + E_y - (2-Q) E_x^-1 E_y"""
    return Sum((
        Shift(x, -1),
        Shift(y, 1),
        Compose((ScalarMul(Coefficient.Q() - 2), Shift(x, -1), Shift(y, 1))),
    ))


def t_operator(x: str, y: str) -> OperatorExpr:
    """E_x + E_y - (2-Q) E_x E_y"""
    return Sum((
        Shift(x, 1),
        Shift(y, 1),
        Compose((ScalarMul(Coefficient.Q() - 2), Shift(x, 1), Shift(y, 1))),
    ))


def neg_qfd(var: str) -> OperatorExpr:
    return Compose((ScalarMul(Coefficient.const(-1)), Qfd(var)))


def pair_factors(names: tuple[str, ...]) -> list[OperatorExpr]:
    """Множители QStrict_{t,s} T_{s,t} для всех пар s < t."""
    return [
        Compose((q_strict(names[t], names[s]), t_operator(names[s], names[t])))
        for s in range(len(names))
        for t in range(s + 1, len(names))
    ]


def apply_factors(factors: list[OperatorExpr], p: MultiPoly) -> MultiPoly:
    """Последовательное применение множителей (произведение не раскрывается)."""
    for factor in factors:
        p = apply_operator(factor, p)
    return p

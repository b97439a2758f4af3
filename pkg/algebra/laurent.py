"""
Множители лорановских интегрантов и их разложение в усечённые ряды.

Виды множителей:
- MonomialPower: x^e (только смещение, ряд = 1)
- BinomialPower: (1+x)^e, e любого знака
- QLinearInverse: (Q-(1-Q)x)^(-power)
- GeneralInverse: poly^(-power), свободный член poly обратим
- PolyFactor: poly^power

Функции:
- series_expand(): ряд и мономиальное смещение множителя
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Mapping, Union

from algebra.coefficient import Coefficient, NonUnitError, rational_binomial
from algebra.multipoly import MultiPoly
from algebra.series import TruncSeries
from config import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialPower:
    variable: str
    exponent: int


@dataclass(frozen=True)
class BinomialPower:
    variable: str
    exponent: int


@dataclass(frozen=True)
class QLinearInverse:
    variable: str
    power: int = 1


@dataclass(frozen=True)
class GeneralInverse:
    poly: MultiPoly
    power: int = 1


@dataclass(frozen=True)
class PolyFactor:
    poly: MultiPoly
    power: int = 1


LaurentFactor = Union[MonomialPower, BinomialPower, QLinearInverse, GeneralInverse, PolyFactor]


def series_expand(
    factor: LaurentFactor,
    caps: Mapping[str, int],
) -> tuple[TruncSeries, tuple[int, ...]]:
    """
    Разлагает множитель в ряд по переменным caps (в их порядке).

    Args:
        factor: множитель интегранта
        caps: упорядоченное отображение переменная -> порог

    Returns:
        (ряд неотрицательных степеней, вектор мономиального смещения)

    Raises:
        NonUnitError: GeneralInverse с необратимым свободным членом
    """
    variables = tuple(caps)
    cap_values = tuple(caps.values())
    offset = [0] * len(variables)

    if isinstance(factor, MonomialPower):
        offset[_position(variables, factor.variable)] = factor.exponent
        return TruncSeries.one(variables, cap_values), tuple(offset)

    if isinstance(factor, BinomialPower):
        i = _position(variables, factor.variable)
        terms = {}
        for d in range(cap_values[i] + 1):
            exponent = tuple(d if j == i else 0 for j in range(len(variables)))
            terms[exponent] = rational_binomial(factor.exponent, d)
        return TruncSeries(variables, cap_values, terms), tuple(offset)

    if isinstance(factor, QLinearInverse):
        # (Q-(1-Q)x)^(-p) = sum binom(p+d-1, d) (1-Q)^d Q^(-p-d) x^d
        i = _position(variables, factor.variable)
        p = factor.power
        if p <= 0:
            poly = _q_linear(variables, factor.variable) ** (-p)
            return TruncSeries.from_poly(poly, variables, cap_values), tuple(offset)
        one_minus_q = Coefficient.one() - Coefficient.Q()
        terms = {}
        for d in range(cap_values[i] + 1):
            exponent = tuple(d if j == i else 0 for j in range(len(variables)))
            terms[exponent] = one_minus_q ** d * Coefficient.Q(-p - d) * comb(p + d - 1, d)
        return TruncSeries(variables, cap_values, terms), tuple(offset)

    if isinstance(factor, GeneralInverse):
        base = TruncSeries.from_poly(factor.poly, variables, cap_values)
        if not base.constant().is_unit():
            raise NonUnitError(f"Свободный член не обратим: {base.constant()}")
        inverse = base.inverse()
        if settings.debug:
            check = base * inverse
            if check != TruncSeries.one(variables, cap_values):
                raise ArithmeticError("Проверка обратного ряда умножением не прошла")
            logger.debug("Обратный ряд проверен умножением")
        return inverse ** factor.power, tuple(offset)

    if isinstance(factor, PolyFactor):
        base = TruncSeries.from_poly(factor.poly, variables, cap_values)
        if factor.power < 0:
            return base.inverse() ** (-factor.power), tuple(offset)
        return base ** factor.power, tuple(offset)

    raise TypeError(f"Неизвестный множитель: {factor!r}")


def _position(variables: tuple[str, ...], name: str) -> int:
    try:
        return variables.index(name)
    except ValueError:
        raise ValueError(f"Переменная {name} не входит в {variables}")


def _q_linear(variables: tuple[str, ...], name: str) -> MultiPoly:
    """Q - (1-Q)x"""
    x = MultiPoly.variable(variables, name)
    return MultiPoly.constant(variables, Coefficient.Q()) - x * (Coefficient.one() - Coefficient.Q())

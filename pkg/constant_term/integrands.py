"""
Интегранты теорем о свободном члене и их вычисление.

Классы:
- CTFormula: переменные, множители, префактор

Функции:
- ct_evaluate(): свободный член интегранта через усечённые ряды
- ct_qhtree(): половинные деревья
- ct_vsast_pqc(): симметричные трапеции с заданными 1-столбцами
- ct_vsast_pq(): все симметричные (n, l)-трапеции
- ct_vsast_pq_odd(): симметричные (n, 1)-трапеции, n нечётно
- ct_vsastriangle(): симметричные знакочередующиеся треугольники
"""

import logging
from fractions import Fraction
from math import factorial
from typing import Any, Mapping, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field

from algebra import (
    BinomialPower,
    Coefficient,
    GeneralInverse,
    MonomialPower,
    MultiPoly,
    PolyFactor,
    QLinearInverse,
    TruncSeries,
    constant_term_extract,
    series_expand,
)
from objects import HalvedShape, InvalidObjectError
from operators import parse_polynomial

logger = logging.getLogger(__name__)


class CTFormula(BaseModel):
    """Интегрант prefactor * scalar * prod(множители); свободный член по variables"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    label: str = Field(..., description="Имя теоремы и параметры")
    variables: tuple[str, ...] = Field(..., description="Переменные x1…xm")
    factors: list[Any] = Field(default_factory=list, description="LaurentFactor в порядке умножения")
    prefactor: Coefficient = Field(default_factory=Coefficient.one, description="Множитель из кольца")
    scalar: Fraction = Field(Fraction(1), description="Рациональный множитель (1/m!, 2, знак)")

    def offset(self) -> tuple[int, ...]:
        """Суммарное мономиальное смещение по каждой переменной."""
        total = dict.fromkeys(self.variables, 0)
        for factor in self.factors:
            if isinstance(factor, MonomialPower):
                total[factor.variable] += factor.exponent
        return tuple(total.values())

    def tight_caps(self) -> dict[str, int]:
        """Порог = степень, нужная для свободного члена (не меньше 0)."""
        return {v: max(0, -o) for v, o in zip(self.variables, self.offset())}


def ct_evaluate(formula: CTFormula, caps: Optional[Mapping[str, int]] = None) -> Coefficient:
    """
    Свободный член интегранта.

    Множители по одной переменной раскладываются первыми, затем парные,
    в порядке списка.

    Args:
        formula: интегрант
        caps: пороги по переменным; по умолчанию точные (tight_caps)

    Raises:
        TruncationError: порог меньше нужной степени
    """
    caps = dict(caps) if caps is not None else formula.tight_caps()
    if list(caps) != list(formula.variables):
        caps = {v: caps[v] for v in formula.variables}
    offset = formula.offset()
    if not formula.variables:
        return formula.prefactor * formula.scalar
    if any(o > 0 for o in offset):
        logger.debug(f"{formula.label}: положительное смещение {offset}, свободный член 0")
        return Coefficient.zero()

    product = TruncSeries.one(formula.variables, tuple(caps.values()))
    ordered = sorted(formula.factors, key=lambda f: 0 if _is_univariate(f) else 1)
    for factor in ordered:
        if isinstance(factor, MonomialPower):
            continue
        series, _ = series_expand(factor, caps)
        product = product * series
    value = constant_term_extract(product, offset)
    logger.debug(f"{formula.label}: пороги {tuple(caps.values())}, членов ряда {len(product.terms)}")
    return value * formula.prefactor * formula.scalar


def _is_univariate(factor) -> bool:
    if not isinstance(factor, (GeneralInverse, PolyFactor)):
        return True
    return sum(1 for v in factor.poly.variables if factor.poly.degree(v) > 0) <= 1


# === Общие множители ===

def x_names(m: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, m + 1))


def _pair_tree_factor(variables: tuple[str, ...], s: str, t: str) -> PolyFactor:
    text = (
        f"({t}-{s})*({s}+{t}+{s}*{t})*(Q+(Q-1)*{s}+{t}+{s}*{t})"
        f"*(Q+(Q-1)*{s}+(Q-1)*{t}+(Q-2)*{s}*{t})"
    )
    return PolyFactor(parse_polynomial(text, variables))


def _pairs(variables: tuple[str, ...]):
    return [(variables[i], variables[j]) for i in range(len(variables)) for j in range(i + 1, len(variables))]


# === Деревья ===

def ct_qhtree_formula(n: int, b: int, k: Sequence[int], s: Sequence[int] = ()) -> CTFormula:
    try:
        shape = HalvedShape(n=n, s=list(s))
    except InvalidObjectError:
        raise
    except ValueError as e:
        raise InvalidObjectError(f"Некорректная форма (n={n}, s={list(s)}): {e}")
    m = shape.m
    if len(k) != m:
        raise InvalidObjectError(f"Длина k={list(k)} != ⌈n/2⌉={m}")
    variables = x_names(m)
    odd = n % 2 == 1
    shift = b + (n + 1) // 2 if odd else b + n // 2
    factors: list = []
    sign = 1
    for x, k_r, s_r in zip(variables, k, shape.full_s):
        factors.append(MonomialPower(x, 1 - n + s_r))
        factors.append(BinomialPower(x, int(k_r) - shift))
        # (Q-(1-Q)x)^{-s_r}, для чётного n ещё один множитель Q-(1-Q)x
        factors.append(QLinearInverse(x, s_r if odd else s_r - 1))
        sign *= (-1) ** s_r
    if not odd:
        sign *= (-1) ** (n // 2)
    factors += [_pair_tree_factor(variables, a, c) for a, c in _pairs(variables)]
    return CTFormula(
        label=f"qhtree(n={n}, b={b}, k={list(k)}, s={shape.full_s})",
        variables=variables,
        factors=factors,
        scalar=Fraction(sign),
    )


def ct_qhtree(n: int, b: int, k: Sequence[int], s: Sequence[int] = ()) -> Coefficient:
    """
    Q-производящая функция половинных s-деревьев как свободный член.

    Raises:
        InvalidObjectError: неверная форма или длина k
    """
    return ct_evaluate(ct_qhtree_formula(n, b, k, s))


# === Симметричные трапеции ===

def _check_even_odd(n: int, l: int) -> None:
    if n < 2 or n % 2:
        raise InvalidObjectError(f"n должно быть чётным >= 2: {n}")
    if l < 1 or l % 2 == 0:
        raise InvalidObjectError(f"l должно быть нечётным: {l}")


def ct_vsast_pqc_formula(n: int, l: int, c: Sequence[int]) -> CTFormula:
    _check_even_odd(n, l)
    c = [int(x) for x in c]
    if len(c) != n // 2 or any(x >= y for x, y in zip(c, c[1:])) or c[0] < -n or c[-1] > -1:
        raise InvalidObjectError(f"Нужно -n <= c_1 < … < c_(n/2) <= -1: {c}")
    variables = x_names(n // 2)
    factors: list = []
    sign = 1
    for x, c_r in zip(variables, c):
        power = -c_r - 1
        factors.append(MonomialPower(x, 2 - n + power))
        factors.append(BinomialPower(x, c_r - (l - 5) // 2 - n // 2))
        factors.append(PolyFactor(parse_polynomial(f"Q-(P-Q)*{x}", variables)))
        factors.append(QLinearInverse(x, power + 1))
        sign *= (-1) ** power
    factors += [_pair_tree_factor(variables, a, t) for a, t in _pairs(variables)]
    return CTFormula(
        label=f"vsast_pqc(n={n}, l={l}, c={c})",
        variables=variables,
        factors=factors,
        scalar=Fraction(sign),
    )


def ct_vsast_pqc(n: int, l: int, c: Sequence[int]) -> Coefficient:
    """
    PQ-производящая функция VSAST(n, l) с 1-столбцами в позициях c.

    Raises:
        InvalidObjectError: неверные n, l или c
    """
    return ct_evaluate(ct_vsast_pqc_formula(n, l, c))


def _vsast_sum_formula(label: str, m: int, x_power: int, binomial_power: int, scalar: Fraction) -> CTFormula:
    variables = x_names(m)
    factors: list = []
    for x in variables:
        factors.append(MonomialPower(x, -x_power))
        factors.append(BinomialPower(x, -binomial_power))
        factors.append(PolyFactor(parse_polynomial(f"Q+(Q-P)*{x}", variables)))
        factors.append(GeneralInverse(parse_polynomial(f"Q*(1+{x})^2-{x}^2", variables)))
    for s, t in _pairs(variables):
        numerator = parse_polynomial(
            f"({t}-{s})^2*({s}+{t}+{s}*{t})*(Q+(Q-1)*{s}+(Q-1)*{t}+(Q-2)*{s}*{t})*(Q-{s}*{t})",
            variables,
        )
        factors.append(PolyFactor(numerator))
        factors.append(GeneralInverse(parse_polynomial(f"Q*(1+{s})*(1+{t})-{s}*{t}", variables)))
    return CTFormula(label=label, variables=variables, factors=factors, scalar=scalar)


def ct_vsast_pq_formula(n: int, l: int) -> CTFormula:
    _check_even_odd(n, l)
    m = n // 2
    return _vsast_sum_formula(
        f"vsast_pq(n={n}, l={l})", m, n - 2, (l - 5) // 2 + m, Fraction(1, factorial(m))
    )


def ct_vsast_pq(n: int, l: int) -> Coefficient:
    """PQ-производящая функция всех VSAST(n, l), n чётно, l нечётно."""
    return ct_evaluate(ct_vsast_pq_formula(n, l))


def _check_odd(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise InvalidObjectError(f"n должно быть нечётным: {n}")
    return (n - 1) // 2


def ct_vsast_pq_odd(n: int) -> Coefficient:
    """PQ-производящая функция симметричных (n, 1)-трапеций, n нечётно."""
    m = _check_odd(n)
    formula = _vsast_sum_formula(
        f"vsast_pq_odd(n={n})", m, n - 3, (n - 3) // 2, Fraction(2, factorial(m))
    )
    return ct_evaluate(formula)


def ct_vsastriangle(n: int) -> Coefficient:
    """PQ-производящая функция симметричных знакочередующихся треугольников порядка n."""
    m = _check_odd(n)
    formula = _vsast_sum_formula(
        f"vsastriangle(n={n})", m, n - 3, (n - 3) // 2, Fraction(1, factorial(m))
    )
    return ct_evaluate(formula)

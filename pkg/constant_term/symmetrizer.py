"""
Симметризатор, антисимметризатор и проверка тождеств QASym.

Функции:
- symmetrize(): sym / asym функции по значениям в рациональных точках
- verify_qasym(): тождество QASym и его вариант в наборе точек
- random_qasym_points(): воспроизводимые случайные рациональные точки
- stanton_stembridge_check(): CT(f) = CT(sym f) / m! на усечённом ряде
"""

import logging
import random
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Sequence

from pydantic import BaseModel, Field

from algebra import Coefficient, TruncSeries, constant_term_extract

logger = logging.getLogger(__name__)

Point = Sequence[Fraction]
Evaluable = Callable[[Point], Fraction]


class SingularPointError(ZeroDivisionError):
    """Точка попала в полюс функции"""
    pass


class SymmetrizeMode(str, Enum):
    SYM = "sym"
    ASYM = "asym"


class QasymVariant(str, Enum):
    QASYM = "qasym"
    QASYM_VAR = "qasym_var"


class IdentityCheck(BaseModel):
    """Результат проверки тождества в наборе точек"""
    variant: QasymVariant = Field(..., description="Какое тождество проверялось")
    m: int = Field(..., ge=0, description="Число переменных")
    checked: int = Field(0, description="Точек проверено")
    skipped: list[str] = Field(default_factory=list, description="Точки-полюса (пропущены)")
    failures: list[str] = Field(default_factory=list, description="Точки, где стороны различны")

    def __bool__(self) -> bool:
        return not self.failures and self.checked > 0


def _sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetrize(f: Evaluable, m: int, mode: SymmetrizeMode = SymmetrizeMode.SYM) -> Evaluable:
    """
    sym f = sum_sigma f(x_sigma), asym f = sum_sigma sgn(sigma) f(x_sigma).

    Возвращает функцию точки; деление на ноль внутри f превращается
    в SingularPointError.
    """
    mode = SymmetrizeMode(mode)
    perms = [(p, _sign(p)) for p in permutations(range(m))]

    def evaluate(point: Point) -> Fraction:
        if len(point) != m:
            raise ValueError(f"Ожидалась точка из {m} координат: {list(point)}")
        total = Fraction(0)
        for perm, sign in perms:
            try:
                value = f([point[i] for i in perm])
            except ZeroDivisionError as e:
                raise SingularPointError(f"Полюс в точке {[str(x) for x in point]}: {e}")
            total += value if mode == SymmetrizeMode.SYM or sign > 0 else -value
        return total

    return evaluate


# === QASym ===

def _pair_linear(q: Fraction, xs: Fraction, xt: Fraction) -> Fraction:
    return q + (q - 1) * xs + xt + xs * xt


def _qasym_lhs_argument(q: Fraction) -> Evaluable:
    def f(x: Point) -> Fraction:
        m = len(x)
        y = [xi * (1 + xi) / (q + xi) for xi in x]
        value = Fraction(1)
        for r in range(m):
            tail = Fraction(1)
            for j in range(r, m):
                tail *= y[j]
            value *= y[r] ** r / (1 - tail)
        for s in range(m):
            for t in range(s + 1, m):
                value *= _pair_linear(q, x[s], x[t])
        return value
    return f


def _qasym_rhs(q: Fraction, x: Point) -> Fraction:
    m = len(x)
    value = Fraction(1)
    for xr in x:
        value *= (q + xr) / (q - xr * xr)
    for s in range(m):
        for t in range(s + 1, m):
            xs, xt = x[s], x[t]
            value *= (q * (1 + xs) * (1 + xt) - xs * xt) * (xt - xs) / (q - xs * xt)
    return value


def _qasym_var_lhs_argument(q: Fraction) -> Evaluable:
    def f(x: Point) -> Fraction:
        m = len(x)
        y = [-xi / ((q - (1 - q) * xi) * (1 + xi)) for xi in x]
        value = Fraction(1)
        head = Fraction(1)
        for r in range(m):
            head *= y[r]
            value *= y[r] ** (m - 1 - r) / (1 - head)
        for s in range(m):
            for t in range(s + 1, m):
                value *= _pair_linear(q, x[s], x[t])
        return value
    return f


def _qasym_var_rhs(q: Fraction, x: Point) -> Fraction:
    m = len(x)
    value = Fraction(1)
    for xr in x:
        value *= (1 + xr) * (q - (1 - q) * xr) / (q * (1 + xr) ** 2 - xr * xr)
    for s in range(m):
        for t in range(s + 1, m):
            xs, xt = x[s], x[t]
            value *= (q - xs * xt) * (xt - xs) / (q * (1 + xs) * (1 + xt) - xs * xt)
    return value


def random_qasym_points(
    m: int, count: int, seed: int, bound: int = 9
) -> list[tuple[list[Fraction], Fraction]]:
    """count точек (x_1…x_m, Q) с рациональными координатами из [-bound, bound]."""
    rng = random.Random(seed)

    def rational() -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    return [([rational() for _ in range(m)], rational()) for _ in range(count)]


def verify_qasym(
    m: int,
    points: Sequence[tuple[Point, Fraction]],
    variant: QasymVariant = QasymVariant.QASYM,
) -> IdentityCheck:
    """
    Проверяет antisym(левая часть) = правая часть точно в каждой точке.

    Полюса любой из сторон пропускаются и попадают в отчёт.

    Args:
        m: число переменных
        points: пары (x, Q)
        variant: QASym или вариант после замены x_i -> -x_{m+1-i}/(1+x_{m+1-i})
    """
    variant = QasymVariant(variant)
    report = IdentityCheck(variant=variant, m=m)
    for x, q in points:
        x = [Fraction(v) for v in x]
        q = Fraction(q)
        if variant == QasymVariant.QASYM:
            lhs_fn, rhs_fn = symmetrize(_qasym_lhs_argument(q), m, SymmetrizeMode.ASYM), _qasym_rhs
        else:
            lhs_fn, rhs_fn = symmetrize(_qasym_var_lhs_argument(q), m, SymmetrizeMode.ASYM), _qasym_var_rhs
        label = f"x={[str(v) for v in x]}, Q={q}"
        try:
            lhs = lhs_fn(x)
            rhs = rhs_fn(q, x)
        except ZeroDivisionError:
            logger.warning(f"{variant.value}: полюс, точка пропущена ({label})")
            report.skipped.append(label)
            continue
        report.checked += 1
        if lhs != rhs:
            report.failures.append(f"{label}: {lhs} != {rhs}")
    logger.info(
        f"{variant.value} m={m}: проверено {report.checked}, "
        f"пропущено {len(report.skipped)}, расхождений {len(report.failures)}"
    )
    return report


# === Stanton–Stembridge ===

def stanton_stembridge_check(
    series: TruncSeries, offset: Sequence[int]
) -> tuple[Coefficient, Coefficient]:
    """
    (CT(x^offset f), CT(x^offset sym f) / m!) для симметричного смещения.

    Raises:
        ValueError: смещение не одинаково по всем переменным
    """
    offset = tuple(offset)
    if len(set(offset)) > 1:
        raise ValueError(f"Смещение должно быть симметричным: {offset}")
    m = len(series.variables)
    direct = constant_term_extract(series, offset)
    symmetric = constant_term_extract(series.symmetrized(), offset) * Fraction(1, factorial(m))
    return direct, symmetric

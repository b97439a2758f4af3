"""
Проверка лемм о суммировании в целых точках.

Каждая функция возвращает пару (левая часть, правая часть), вычисленных
независимо: левая — прямым суммированием q_sum, правая — операторами.
"""

import logging
from typing import Callable, Sequence

from algebra import Coefficient, MultiPoly, binomial_poly, poly_det
from objects import InvalidObjectError
from operators.expr import (
    Fd,
    OperatorExpr,
    QE,
    QId,
    ScalarMul,
    apply_factors,
    pair_factors,
)
from operators.summation import SumSpec, SumVariant, q_sum
from operators.theorems import k_names

logger = logging.getLogger(__name__)


def l_names(count: int) -> tuple[str, ...]:
    return tuple(f"l{i}" for i in range(1, count + 1))


def binomial_det(
    names: Sequence[str], b: int, order: int, lower: Callable[[int], int]
) -> MultiPoly:
    """det_{1<=i,j<=len(names)} binom(v_i + i + j - b - order - 2, lower(j))."""
    names = tuple(names)
    size = len(names)
    matrix = []
    for i, name in enumerate(names, start=1):
        row = []
        for j in range(1, size + 1):
            base = MultiPoly.variable(names, name) + (i + j - b - order - 2)
            row.append(binomial_poly(base, lower(j)))
        matrix.append(row)
    return poly_det(matrix, names)


def _check_k(n: int, k: Sequence[int]) -> list[int]:
    k = [int(x) for x in k]
    if len(k) != n:
        raise InvalidObjectError(f"Нужно {n} значений k, получено {k}")
    if any(x >= y for x, y in zip(k, k[1:])):
        raise InvalidObjectError(f"k={k} не возрастает строго")
    return k


def _app_odd_operand(names: tuple[str, ...], b: int, order: int, lower: Callable[[int], int]) -> MultiPoly:
    # prod QId_{l_r} prod QStrict T [det binom(…)]
    factors: list[OperatorExpr] = [QId(name) for name in names] + pair_factors(names)
    return apply_factors(factors, binomial_det(names, b, order, lower))


def _drop(names: tuple[str, ...], r: int) -> tuple[str, ...]:
    return names[:r] + names[r + 1:]


def check_sum_op_normal(n: int, k: Sequence[int], b: int) -> tuple[Coefficient, Coefficient]:
    """
    Qsum_{n-1 -> n} prod Fd_{l_i} g  против
    sum_r (-1)^{r-1} prod_{s<r} QId_{k_s} prod_{t>r} QE_{k_t} g(k без k_r).

    g = prod QId prod QStrict T [det_{n-1} binom(l_i+i+j-b-n-1, 2j)].
    """
    k = _check_k(n, k)
    ls = l_names(n - 1)
    ks = k_names(n)
    g = _app_odd_operand(ls, b, n - 1, lambda j: 2 * j)

    lhs_poly = apply_factors([Fd(name) for name in ls], g)
    lhs = q_sum(SumSpec(k=k), lhs_poly)

    point = dict(zip(ks, k))
    rhs = Coefficient.zero()
    for r in range(n):
        remaining = _drop(ks, r)
        term = g.rename(dict(zip(ls, remaining))).with_variables(ks)
        factors = [QId(ks[s]) for s in range(r)] + [QE(ks[t]) for t in range(r + 1, n)]
        value = apply_factors(factors, term).evaluate(point)
        rhs = rhs + (value if r % 2 == 0 else -value)
    logger.debug(f"SumOpNormal n={n}, k={k}, b={b}: {lhs} | {rhs}")
    return lhs, rhs


def check_sum_op_alt(n: int, k: Sequence[int], b: int) -> tuple[Coefficient, Coefficient]:
    """
    Альтернативная сумма с верхней границей b:
    AQsum prod Fd_{l_i} g  против
    Q sum_{r<=n} (-1)^{r-1} prod_{s<r} QId prod_{r<t<=n} QE g(k без k_r, b+1)
    + (-1)^n prod_{s<=n} QId g(k).

    g = prod QStrict T [det_n binom(l_i+i+j-b-n-2, 2j-1)].
    """
    k = _check_k(n, k)
    if k[-1] > b:
        raise InvalidObjectError(f"max k = {k[-1]} > b = {b}")
    ls = l_names(n)
    ks = k_names(n)
    g = apply_factors(pair_factors(ls), binomial_det(ls, b, n, lambda j: 2 * j - 1))

    lhs_poly = apply_factors([Fd(name) for name in ls], g)
    lhs = q_sum(SumSpec(k=k + [b], variant=SumVariant.ALTERNATIVE), lhs_poly)

    point = dict(zip(ks, k))
    rhs = Coefficient.zero()
    for r in range(n):
        remaining = _drop(ks, r)
        term = g.substitute({ls[-1]: b + 1}).rename(dict(zip(ls[:-1], remaining))).with_variables(ks)
        factors = [QId(ks[s]) for s in range(r)] + [QE(ks[t]) for t in range(r + 1, n)]
        value = apply_factors(factors, term).evaluate(point)
        rhs = rhs + (value if r % 2 == 0 else -value)
    rhs = rhs * Coefficient.Q()
    last = apply_factors([QId(name) for name in ks], g.rename(dict(zip(ls, ks)))).evaluate(point)
    rhs = rhs + (last if n % 2 == 0 else -last)
    logger.debug(f"SumOpAlt n={n}, k={k}, b={b}: {lhs} | {rhs}")
    return lhs, rhs


def check_app_sum_odd(n: int, k: Sequence[int], b: int) -> tuple[Coefficient, Coefficient]:
    """
    Qsum_{n-1 -> n} prod QId_{l_r} prod QStrict T [det_{n-1} binom(l_i+i+j-b-n-1, 2j-1)]
    = prod QStrict T [det_n binom(k_i+i+j-b-n-2, 2j-2)].
    """
    k = _check_k(n, k)
    ls = l_names(n - 1)
    ks = k_names(n)
    lhs = q_sum(SumSpec(k=k), _app_odd_operand(ls, b, n - 1, lambda j: 2 * j - 1))
    rhs_poly = apply_factors(pair_factors(ks), binomial_det(ks, b, n, lambda j: 2 * j - 2))
    rhs = rhs_poly.evaluate(dict(zip(ks, k)))
    logger.debug(f"AppSumOdd n={n}, k={k}, b={b}: {lhs} | {rhs}")
    return lhs, rhs


def check_app_sum_even(n: int, k: Sequence[int], b: int) -> tuple[Coefficient, Coefficient]:
    """
    AQbsum_n prod QStrict T [det_n binom(l_i+i+j-b-n-2, 2j-2)]
    = (-1)^n prod QId_{k_r} prod QStrict T [det_n binom(k_i+i+j-b-n-2, 2j-1)].
    """
    k = _check_k(n, k)
    if k[-1] > b:
        raise InvalidObjectError(f"max k = {k[-1]} > b = {b}")
    ls = l_names(n)
    ks = k_names(n)
    operand = apply_factors(pair_factors(ls), binomial_det(ls, b, n, lambda j: 2 * j - 2))
    lhs = q_sum(SumSpec(k=k + [b], variant=SumVariant.ALTERNATIVE), operand)
    factors: list[OperatorExpr] = [QId(name) for name in ks] + pair_factors(ks)
    if n % 2:
        factors.append(ScalarMul(Coefficient.const(-1)))
    rhs_poly = apply_factors(factors, binomial_det(ks, b, n, lambda j: 2 * j - 1))
    rhs = rhs_poly.evaluate(dict(zip(ks, k)))
    logger.debug(f"AppSumEven n={n}, k={k}, b={b}: {lhs} | {rhs}")
    return lhs, rhs

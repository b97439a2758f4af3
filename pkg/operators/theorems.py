"""
Операторные формулы производящих функций.

Функции:
- qhmt_operand(): произведение-операнд для Q-перечисления HMT
- qhmt_operator(): список операторных множителей
- qhmt_polynomial() / qhmt_genfun(): Q-производящая функция HMT
- qhtree_polynomial() / qhtree_genfun(): половинные деревья
- hmt_pq_polynomial() / hmt_pq_genfun(): PQ-уточнение по равным нижним парам
- vsast_qc_genfun(): симметричные трапеции с заданными 10-столбцами
- vsast_pqc_genfun_op(), vsast_pq_genfun_op(): PQ-производящие функции трапеций

Многочлены строятся символьно (переменные k1…km и, при b=None, b),
операторы применяются по одному множителю, затем подставляется точка.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from algebra import Coefficient, MultiPoly
from config import settings
from objects import HalvedShape, InvalidObjectError, ResourceBoundError
from operators.expr import (
    Compose,
    Id,
    OperatorExpr,
    QId,
    Qfd,
    ScalarMul,
    Sum,
    apply_factors,
    neg_qfd,
    pair_factors,
)
from operators.summation import SumSpec, SumVariant, summation_points

logger = logging.getLogger(__name__)


class SymbolicCapError(ResourceBoundError):
    """m = ⌈n/2⌉ больше settings.max_symbolic_m"""
    pass


def k_names(m: int) -> tuple[str, ...]:
    return tuple(f"k{i}" for i in range(1, m + 1))


def _check_cap(n: int) -> None:
    m = (n + 1) // 2
    if m > settings.max_symbolic_m:
        raise SymbolicCapError(
            f"Операторный метод для n={n}: m={m} > {settings.max_symbolic_m} "
            f"(переменная ASTRAP_MAX_SYMBOLIC_M)"
        )


# === HMT ===

def qhmt_operand(n: int, b: Optional[int] = None) -> MultiPoly:
    """
    Операнд теоремы о Q-перечислении HMT.

    Нечётное n: prod_{i<j} (k_j-k_i+j-i)(2b+n+2-k_i-k_j-i-j) / ((j-i)(i+j-1)).
    Чётное n: prod_{i<j} (…)/((j-i)(i+j)) * prod_i (b+n/2+1-k_i-i)/i.

    Args:
        n: порядок треугольника (>= 1)
        b: целое значение или None (тогда b — переменная многочлена)
    """
    if n < 1:
        raise InvalidObjectError(f"Порядок должен быть >= 1: {n}")
    m = (n + 1) // 2
    names = k_names(m)
    variables = names if b is not None else names + ("b",)
    k = [MultiPoly.variable(variables, name) for name in names]
    b_poly = MultiPoly.constant(variables, b) if b is not None else MultiPoly.variable(variables, "b")
    odd = n % 2 == 1

    result = MultiPoly.constant(variables, 1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            first = k[j - 1] - k[i - 1] + (j - i)
            second = b_poly * 2 - k[i - 1] - k[j - 1] + (n + 2 - i - j)
            denominator = (j - i) * (i + j - 1 if odd else i + j)
            result = result * first * second * Fraction(1, denominator)
    if not odd:
        for i in range(1, m + 1):
            result = result * (b_poly - k[i - 1] + (n // 2 + 1 - i)) * Fraction(1, i)
    return result


def qhmt_operator(n: int) -> list[OperatorExpr]:
    """Множители: пары QStrict*T, для чётного n также QId_{k_r}."""
    names = k_names((n + 1) // 2)
    factors = pair_factors(names)
    if n % 2 == 0:
        factors += [QId(name) for name in names]
    return factors


def qhmt_polynomial(n: int, b: Optional[int] = None, memo: Optional[dict] = None) -> MultiPoly:
    """
    Q-производящая функция HMT как многочлен от k (и b).

    memo: словарь вызывающего для повторного использования многочленов
    в пределах одной задачи; без него многочлен строится заново.
    """
    _check_cap(n)
    memo = {} if memo is None else memo
    key = ("hmt", n, b)
    if key not in memo:
        logger.debug(f"Шаг 1: операнд HMT n={n}, b={b}")
        operand = qhmt_operand(n, b)
        factors = qhmt_operator(n)
        logger.debug(f"Шаг 2: применение {len(factors)} множителей")
        memo[key] = apply_factors(factors, operand)
    return memo[key]


def _point(k: Sequence[int], b: Optional[int] = None) -> dict:
    point = dict(zip(k_names(len(k)), k))
    if b is not None:
        point["b"] = b
    return point


def _check_hmt_bottom(n: int, b: int, k: Sequence[int]) -> list[int]:
    k = [int(x) for x in k]
    if len(k) != (n + 1) // 2:
        raise InvalidObjectError(f"Длина k={k} != ⌈n/2⌉={(n + 1) // 2}")
    if any(x >= y for x, y in zip(k, k[1:])):
        raise InvalidObjectError(f"Нижняя строка {k} не возрастает строго")
    if k and k[-1] > b:
        raise InvalidObjectError(f"max k = {k[-1]} > b = {b}")
    return k


def qhmt_genfun(n: int, b: int, k: Sequence[int], memo: Optional[dict] = None) -> Coefficient:
    """
    ^Q HMT_n(b; k).

    Raises:
        InvalidObjectError: k не строго возрастает, max k > b или длина не ⌈n/2⌉
        SymbolicCapError: m слишком велико
    """
    k = _check_hmt_bottom(n, b, k)
    return qhmt_polynomial(n, b, memo).evaluate(_point(k))


# === Деревья ===

def _shape(n: int, s: Sequence[int]) -> HalvedShape:
    try:
        return HalvedShape(n=n, s=list(s))
    except InvalidObjectError:
        raise
    except ValueError as e:
        raise InvalidObjectError(f"Некорректная форма (n={n}, s={list(s)}): {e}")


def qhtree_polynomial(
    n: int, s: Sequence[int], b: Optional[int] = None, memo: Optional[dict] = None
) -> MultiPoly:
    """prod_r (-Qfd_{k_r})^{s_r} ^Q HMT_n(b; k) как многочлен."""
    shape = _shape(n, s)
    _check_cap(n)
    memo = {} if memo is None else memo
    full_s = tuple(shape.full_s)
    if not any(full_s):
        return qhmt_polynomial(n, b, memo)
    key = ("tree", n, b, full_s)
    if key not in memo:
        names = k_names(len(full_s))
        factors = [neg_qfd(name) for name, s_r in zip(names, full_s) for _ in range(s_r)]
        memo[key] = apply_factors(factors, qhmt_polynomial(n, b, memo))
    return memo[key]


def qhtree_genfun(
    n: int, b: int, k: Sequence[int], s: Sequence[int], memo: Optional[dict] = None
) -> Coefficient:
    """
    Q-производящая функция половинных (s)-деревьев с нижними элементами k.

    Raises:
        InvalidObjectError: неверная форма или длина k
    """
    shape = _shape(n, s)
    if len(k) != shape.m:
        raise InvalidObjectError(f"Длина k={list(k)} != ⌈n/2⌉={shape.m}")
    return qhtree_polynomial(n, s, b, memo).evaluate(_point([int(x) for x in k]))


def _check_l_eq(l_eq: Iterable[int], m: int) -> set[int]:
    l_eq = set(int(i) for i in l_eq)
    if not l_eq <= set(range(1, m + 1)):
        raise InvalidObjectError(f"L_eq={sorted(l_eq)} не подмножество {{1…{m}}}")
    return l_eq


def _paired_diagonals(shape: HalvedShape) -> list[int]:
    """Диагонали, в которых после усечения не меньше двух клеток."""
    return [i for i in range(1, shape.m + 1) if shape.bottom_row_of(i) > 2 * i - 1]


def pq_formula_applies(shape: HalvedShape, l_eq: Iterable[int]) -> bool:
    """
    Операторное произведение считает деревья, только если каждое s + 1_B
    (B содержит L_eq) остаётся невозрастающим.

    Нарушение возможно лишь при s_i = s_{i+1}, когда i не в L_eq, а
    диагональ i+1 имеет две клетки.
    """
    l_eq = set(l_eq)
    s = shape.full_s
    paired = set(_paired_diagonals(shape))
    return all(
        i in l_eq
        for i in range(1, shape.m)
        if i + 1 in paired and s[i - 1] == s[i]
    )


def hmt_pq_polynomial(
    n: int,
    s: Sequence[int],
    l_eq: Iterable[int],
    b: Optional[int] = None,
    memo: Optional[dict] = None,
) -> MultiPoly:
    """
    prod_{i in L} (-Qfd_{k_i}) prod_{i not in L} (Id + Qfd_{k_i}) на дереве.

    Диагональ из одной клетки: при i in L результат ноль, иначе множителя нет.

    Raises:
        InvalidObjectError: неверная форма или L_eq; произведение неприменимо
            (pq_formula_applies ложно)
    """
    shape = _shape(n, s)
    l_eq = _check_l_eq(l_eq, shape.m)
    polynomial = qhtree_polynomial(n, s, b, memo)
    paired = _paired_diagonals(shape)
    if not l_eq <= set(paired):
        return MultiPoly.constant(polynomial.variables, 0)
    if not pq_formula_applies(shape, l_eq):
        raise InvalidObjectError(
            f"Произведение для L_eq={sorted(l_eq)} неприменимо к форме s={shape.full_s}: "
            f"s + 1_B перестаёт быть невозрастающим"
        )
    factors: list[OperatorExpr] = [
        neg_qfd(name) if i in l_eq else Sum((Id(), Qfd(name)))
        for i, name in enumerate(k_names(shape.m), start=1)
        if i in paired
    ]
    return apply_factors(factors, polynomial)


def _hmt_pq_by_rows(n: int, b: int, k: list[int], l_eq: set[int], memo: Optional[dict]) -> Coefficient:
    # предпоследняя строка l_1…l_⌊n/2⌋; l_i это верхняя из двух нижних клеток диагонали i
    if n % 2:
        spec = SumSpec(k=k)
    else:
        spec = SumSpec(k=k + [b], variant=SumVariant.ALTERNATIVE)
    inner = qhmt_polynomial(n - 1, b, memo)
    names = k_names(len(spec.k) - 1)
    total = Coefficient.zero()
    for point, exponent in summation_points(spec):
        equal = {i for i, (x, y) in enumerate(zip(point, k), start=1) if x == y}
        if equal == l_eq:
            total = total + inner.evaluate(dict(zip(names, point))) * Coefficient.Q(exponent)
    return total


def hmt_pq_genfun(
    n: int,
    b: int,
    k: Sequence[int],
    s: Sequence[int],
    l_eq: Iterable[int],
    memo: Optional[dict] = None,
) -> Coefficient:
    """
    Производящая функция деревьев, у которых две нижние клетки диагонали i
    равны ровно при i in L_eq.

    Если операторное произведение неприменимо (см. pq_formula_applies) и
    s = 0, суммирует ^Q HMT_{n-1} по предпоследней строке с условием
    l_i = k_i ровно при i in L_eq.

    Raises:
        InvalidObjectError: неверная форма или L_eq; произведение
            неприменимо к усечённому дереву
    """
    shape = _shape(n, s)
    if len(k) != shape.m:
        raise InvalidObjectError(f"Длина k={list(k)} != ⌈n/2⌉={shape.m}")
    l_eq = _check_l_eq(l_eq, shape.m)
    truncated = any(shape.full_s)
    k = [int(x) for x in k] if truncated else _check_hmt_bottom(n, b, k)
    if truncated or pq_formula_applies(shape, l_eq) or not l_eq <= set(_paired_diagonals(shape)):
        return hmt_pq_polynomial(n, s, l_eq, b, memo).evaluate(_point(k))
    logger.debug(f"hmt_pq n={n}, k={k}, L_eq={sorted(l_eq)}: суммирование по предпоследней строке")
    return _hmt_pq_by_rows(n, b, k, l_eq, memo)


# === Симметричные трапеции ===

def _check_vsast_parameters(n: int, l: int) -> None:
    if n < 2 or n % 2:
        raise InvalidObjectError(f"n должно быть чётным >= 2: {n}")
    if l < 1 or l % 2 == 0:
        raise InvalidObjectError(f"l должно быть нечётным: {l}")


def _check_vsast_c(n: int, l: int, c: Sequence[int]) -> list[int]:
    _check_vsast_parameters(n, l)
    c = [int(x) for x in c]
    if len(c) != n // 2:
        raise InvalidObjectError(f"Длина c={c} != n/2={n // 2}")
    if any(x >= y for x, y in zip(c, c[1:])) or c[0] < -n or c[-1] > -1:
        raise InvalidObjectError(f"Нужно -n <= c_1 < … < c_(n/2) <= -1: {c}")
    return c


def vsast_admissible(n: int, c: Sequence[int]) -> bool:
    """c_r >= 2r-n-1 для всех r: иначе трапеций с таким c нет."""
    return all(x >= 2 * r - n - 1 for r, x in enumerate(c, start=1))


def admissible_c_vectors(n: int) -> list[tuple[int, ...]]:
    """Все допустимые c с c_{n/2} = -1."""
    return [
        c
        for c in combinations(range(-n, 0), n // 2)
        if c[-1] == -1 and vsast_admissible(n, c)
    ]


def _vsast_tree_polynomial(n: int, l: int, c: Sequence[int], memo: Optional[dict]) -> MultiPoly:
    # дерево порядка n-1 с s_r = -c_r-1 и b = (l-5)/2
    return qhtree_polynomial(n - 1, [-x - 1 for x in c], (l - 5) // 2, memo)


def vsast_qc_genfun(
    n: int, l: int, c: Sequence[int], c10: Iterable[int], memo: Optional[dict] = None
) -> Coefficient:
    """
    Q-производящая функция VSAST(n, l) с не-0 столбцами c слева от центра,
    10-столбцы которых — ровно C10.

    Множитель -Qfd_{c_r} для c_r in C10 и Id + Qfd_{c_r} для остальных,
    для всех r без исключений.

    Raises:
        InvalidObjectError: неверные n, l, c или C10 не подмножество c
    """
    c = _check_vsast_c(n, l, c)
    c10 = set(int(x) for x in c10)
    if not c10 <= set(c):
        raise InvalidObjectError(f"C10={sorted(c10)} не подмножество c={c}")
    if not vsast_admissible(n, c):
        logger.debug(f"c={c} недопустим для n={n}: производящая функция 0")
        return Coefficient.zero()
    factors = [
        neg_qfd(name) if x in c10 else Sum((Id(), Qfd(name)))
        for name, x in zip(k_names(len(c)), c)
    ]
    return apply_factors(factors, _vsast_tree_polynomial(n, l, c, memo)).evaluate(_point(c))


def _pqc_factors(c: Sequence[int]) -> list[OperatorExpr]:
    p_minus_one = Coefficient.P() - 1
    return [
        Sum((Id(), Compose((ScalarMul(-p_minus_one), Qfd(name)))))
        for name in k_names(len(c))
    ]


def vsast_pqc_genfun_op(n: int, l: int, c: Sequence[int], memo: Optional[dict] = None) -> Coefficient:
    """
    PQ-производящая функция VSAST(n, l) с заданным c:
    prod_r (Id - (P-1)Qfd_{c_r}) (-Qfd_{c_r})^{-c_r-1} ^Q HMT_{n-1}((l-5)/2; c).

    Raises:
        InvalidObjectError: неверные n, l или c
    """
    c = _check_vsast_c(n, l, c)
    if not vsast_admissible(n, c):
        return Coefficient.zero()
    return apply_factors(_pqc_factors(c), _vsast_tree_polynomial(n, l, c, memo)).evaluate(_point(c))


def vsast_pq_genfun_op(n: int, l: int, memo: Optional[dict] = None) -> Coefficient:
    """Сумма vsast_pqc_genfun_op по всем допустимым c."""
    _check_vsast_parameters(n, l)
    _check_cap(n - 1)
    base = qhmt_polynomial(n - 1, (l - 5) // 2, memo)
    vectors = admissible_c_vectors(n)
    total = Coefficient.zero()
    for step, c in enumerate(vectors, start=1):
        logger.debug(f"Шаг {step}/{len(vectors)}: c={list(c)}")
        tree_factors = [neg_qfd(name) for name, x in zip(k_names(len(c)), c) for _ in range(-x - 1)]
        polynomial = apply_factors(_pqc_factors(c) + tree_factors, base)
        total = total + polynomial.evaluate(_point(c))
    logger.info(f"PQ-функция VSAST({n},{l}) операторным методом: {len(vectors)} векторов c")
    return total

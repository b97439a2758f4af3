"""
Точные определители и формулы вида «определитель = произведение».

Функции:
- rational_det(): определитель рациональной матрицы (Bareiss, sympy)
- binomial(): целочисленный биномиальный коэффициент, 0 вне треугольника
- det_binom(): биномиальные определители (чётный и нечётный вариант)
- hmt_product(), hmt_det_closed(): операнд перечисления HMT двумя способами
"""

import logging
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from sympy import Matrix, Rational as SympyRational

from algebra import rational_binomial

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class IdentityViolationError(AssertionError):
    """Две стороны замкнутой формулы не совпали"""
    pass


def rational_det(matrix: Sequence[Sequence[Scalar]]) -> Fraction:
    """
    Определитель без дробей по Bareiss над точными рациональными числами.

    Пустая матрица имеет определитель 1.
    """
    if not matrix:
        return Fraction(1)
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError("Матрица не квадратная")
    sympy_matrix = Matrix([
        [SympyRational(Fraction(x).numerator, Fraction(x).denominator) for x in row]
        for row in matrix
    ])
    value = sympy_matrix.det(method="bareiss")
    return Fraction(int(value.p), int(value.q))


def binomial(top: int, bottom: int) -> int:
    """binom(top, bottom) для путей: 0 при bottom < 0, top < 0 или bottom > top."""
    if bottom < 0 or top < 0 or bottom > top:
        return 0
    return comb(top, bottom)


def _ensure_equal(name: str, determinant: Fraction, product: Fraction) -> None:
    if determinant != product:
        logger.error(f"{name}: определитель {determinant} != произведение {product}")
        raise IdentityViolationError(f"{name}: определитель {determinant} != произведение {product}")


def det_binom(variant: str, k: Sequence[int]) -> Fraction:
    """
    det binom(k_i+j-1, 2j-1) (even) или det binom(k_i+j-3/2, 2j-2) (odd).

    Обе стороны вычисляются независимо и сравниваются.

    Returns:
        Значение определителя

    Raises:
        IdentityViolationError: стороны различны
    """
    k = [Fraction(x) for x in k]
    m = len(k)
    if variant == "even":
        matrix = [[rational_binomial(k[i] + j, 2 * j + 1) for j in range(m)] for i in range(m)]
    elif variant == "odd":
        matrix = [[rational_binomial(k[i] + j - Fraction(1, 2), 2 * j) for j in range(m)] for i in range(m)]
    else:
        raise ValueError(f"Неизвестный вариант: {variant}")

    product = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            denominator = (j - i) * (j + i if variant == "even" else j + i - 1)
            product *= (k[j - 1] - k[i - 1]) * (k[j - 1] + k[i - 1]) / denominator
    if variant == "even":
        for i in range(1, m + 1):
            product *= k[i - 1] / i

    determinant = rational_det(matrix)
    _ensure_equal(f"det_binom({variant}, {[str(x) for x in k]})", determinant, product)
    return determinant


def hmt_product(n: int, b: int, k: Sequence[int]) -> Fraction:
    """Произведение-операнд перечисления HMT (значение при любых целых k)."""
    m = (n + 1) // 2
    odd = n % 2 == 1
    product = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            numerator = (k[j - 1] - k[i - 1] + j - i) * (2 * b + n + 2 - k[i - 1] - k[j - 1] - i - j)
            product *= Fraction(numerator, (j - i) * (i + j - 1 if odd else i + j))
    if not odd:
        for i in range(1, m + 1):
            product *= Fraction(b + n // 2 + 1 - k[i - 1] - i, i)
    return product


def hmt_det_closed(n: int, b: int, k: Sequence[int]) -> Fraction:
    """
    Операнд перечисления HMT как произведение и как знаковый определитель.

    Чётное n: (-1)^{C(n/2+1, 2)} det binom(k_i+i+j-b-n/2-2, 2j-1).
    Нечётное n: (-1)^{C((n+1)/2, 2)} det binom(k_i+i+j-b-(n+1)/2-2, 2j-2).

    Raises:
        IdentityViolationError: стороны различны
    """
    if n < 1:
        raise ValueError(f"Порядок должен быть >= 1: {n}")
    k = [int(x) for x in k]
    m = (n + 1) // 2
    if len(k) != m:
        raise ValueError(f"Длина k={k} != ⌈n/2⌉={m}")
    if n % 2 == 0:
        sign = (-1) ** comb(m + 1, 2)
        matrix = [
            [rational_binomial(k[i - 1] + i + j - b - m - 2, 2 * j - 1) for j in range(1, m + 1)]
            for i in range(1, m + 1)
        ]
    else:
        sign = (-1) ** comb(m, 2)
        matrix = [
            [rational_binomial(k[i - 1] + i + j - b - m - 2, 2 * j - 2) for j in range(1, m + 1)]
            for i in range(1, m + 1)
        ]
    determinant = sign * rational_det(matrix)
    product = hmt_product(n, b, k)
    _ensure_equal(f"hmt_det_closed(n={n}, b={b}, k={k})", determinant, product)
    return product

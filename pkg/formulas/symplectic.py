"""
Симплектические характеры в точке (1, …, 1).

Чётный случай: sp_λ(x_1…x_m), N = 2m аргументов h.
Нечётный (по Проктору): n = 2m-1, N = n аргументов h.
"""

import logging
from fractions import Fraction
from math import comb
from typing import Literal

from pydantic import BaseModel, Field, field_validator

from formulas.determinants import IdentityViolationError, rational_det

logger = logging.getLogger(__name__)


class Partition(BaseModel):
    """Разбиение: нестрого убывающие неотрицательные части (нули допустимы)"""
    parts: list[int] = Field(default_factory=list, description="λ_1 >= λ_2 >= … >= 0")

    model_config = {"frozen": True}

    @field_validator("parts")
    @classmethod
    def _decreasing(cls, value: list[int]) -> list[int]:
        if any(x < 0 for x in value) or any(x < y for x, y in zip(value, value[1:])):
            raise ValueError(f"Не разбиение: {value}")
        return value

    @classmethod
    def from_bottom_row(cls, b: int, k: list[int]) -> "Partition":
        """(b-k_1, …, b-k_m) для нижней строки k."""
        return cls(parts=sorted((b - x for x in k), reverse=True))


def _complete_homogeneous(r: int, arguments: int) -> int:
    # h_r(1, …, 1) от arguments переменных
    if r < 0:
        return 0
    return comb(r + arguments - 1, r)


def _product_method(parts: list[int], odd: bool) -> Fraction:
    m = len(parts)
    value = Fraction(1)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            li, lj = parts[i - 1], parts[j - 1]
            if odd:
                value *= Fraction((li - lj + j - i) * (li + lj + 2 * m + 1 - i - j), (j - i) * (j + i - 1))
            else:
                value *= Fraction((li - lj + j - i) * (li + lj + 2 * m + 2 - i - j), (j - i) * (i + j))
    if not odd:
        for i in range(1, m + 1):
            value *= Fraction(parts[i - 1] + m + 1 - i, i)
    return value


def _jacobi_trudi(parts: list[int], odd: bool) -> Fraction:
    m = len(parts)
    arguments = 2 * m - 1 if odd else 2 * m
    matrix = [
        [
            _complete_homogeneous(parts[i - 1] - i + j, arguments)
            + _complete_homogeneous(parts[i - 1] - i - j + 2, arguments)
            for j in range(1, m + 1)
        ]
        for i in range(1, m + 1)
    ]
    return rational_det(matrix) / 2


def sp_all_ones(
    lam: Partition,
    parity: Literal["even", "odd"],
    method: Literal["product", "jacobi_trudi"] = "product",
) -> int:
    """
    sp_λ(1, …, 1) для m = len(λ) частей.

    Raises:
        IdentityViolationError: результат не целый
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"Неизвестная чётность: {parity}")
    parts = list(lam.parts)
    if not parts:
        return 1
    odd = parity == "odd"
    if method == "product":
        value = _product_method(parts, odd)
    elif method == "jacobi_trudi":
        value = _jacobi_trudi(parts, odd)
    else:
        raise ValueError(f"Неизвестный метод: {method}")
    if value.denominator != 1:
        raise IdentityViolationError(f"sp_{parts}(1…1) не целое: {value}")
    logger.debug(f"sp_{parts}({parity}, {method}) = {value}")
    return int(value)

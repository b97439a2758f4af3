"""
Операторы суммирования с Q-весами (рекурсия по нижним строкам).

Стандартный вариант: l_1 < … < l_{n-1}, k_i <= l_i <= k_{i+1},
вес Q^{sum [k_i < l_i < k_{i+1}]}.
Альтернативный: последняя скобка заменена на [k_{n-1} < l_{n-1}].
"""

import logging
from enum import Enum
from typing import Iterator

from pydantic import BaseModel, Field, field_validator

from algebra import Coefficient, MultiPoly

logger = logging.getLogger(__name__)


class SumVariant(str, Enum):
    STANDARD = "standard"
    ALTERNATIVE = "alternative"


class SumSpec(BaseModel):
    """Границы суммирования k_1 <= … <= k_n и вариант показателя"""
    k: list[int] = Field(..., min_length=1, description="Границы k_1…k_n")
    variant: SumVariant = Field(SumVariant.STANDARD, description="Вариант Iverson-показателя")

    @field_validator("k")
    @classmethod
    def _weakly_increasing(cls, value: list[int]) -> list[int]:
        if any(x > y for x, y in zip(value, value[1:])):
            raise ValueError(f"Границы не возрастают: {value}")
        return value


def summation_points(spec: SumSpec) -> Iterator[tuple[tuple[int, ...], int]]:
    """Все точки (l_1, …, l_{n-1}) и показатели Q."""
    k = spec.k
    size = len(k) - 1
    last_alternative = spec.variant == SumVariant.ALTERNATIVE

    def walk(i: int, prefix: tuple[int, ...], exponent: int):
        if i == size:
            yield prefix, exponent
            return
        low = k[i] if not prefix else max(k[i], prefix[-1] + 1)
        for value in range(low, k[i + 1] + 1):
            if last_alternative and i == size - 1:
                bonus = int(k[i] < value)
            else:
                bonus = int(k[i] < value < k[i + 1])
            yield from walk(i + 1, prefix + (value,), exponent + bonus)

    yield from walk(0, (), 0)


def q_sum(spec: SumSpec, f: MultiPoly) -> Coefficient:
    """
    Прямое вложенное суммирование f(l) * Q^{показатель}.

    Args:
        spec: границы k (n значений)
        f: многочлен ровно от n-1 переменных, порядок переменных = l_1…l_{n-1}

    Returns:
        Значение суммы
    """
    names = f.variables
    if len(names) != len(spec.k) - 1:
        raise ValueError(f"Нужно {len(spec.k) - 1} переменных суммирования, у f: {names}")
    total = Coefficient.zero()
    points = 0
    for point, exponent in summation_points(spec):
        value = f.evaluate(dict(zip(names, point)))
        total = total + value * Coefficient.Q(exponent)
        points += 1
    logger.debug(f"q_sum({spec.variant.value}, k={spec.k}): {points} точек")
    return total

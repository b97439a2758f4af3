"""
2-перечисление HMT и связь Q-веса с q-весом «новых элементов строки».
"""

import logging
from collections import Counter
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from pydantic import BaseModel, Field

from objects import enumerate_halved_patterns, pattern_q_weight_new_entries

logger = logging.getLogger(__name__)


def two_enumeration(n: int, b: int, k: Sequence[int]) -> int:
    """
    Значение Q-производящей функции HMT при Q = 2 по формуле-произведению.

    Raises:
        ValueError: k не возрастает строго, max k > b или результат не целый
    """
    k = [int(x) for x in k]
    m = (n + 1) // 2
    if len(k) != m:
        raise ValueError(f"Длина k={k} != ⌈n/2⌉={m}")
    if any(x >= y for x, y in zip(k, k[1:])) or (k and k[-1] > b):
        raise ValueError(f"Нужна строго возрастающая нижняя строка <= b: k={k}, b={b}")
    odd = n % 2 == 1
    value = Fraction(4 ** comb(m, 2))
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            value *= Fraction(
                (k[j - 1] - k[i - 1]) * (2 * b + 1 - k[i - 1] - k[j - 1]),
                (j - i) * (i + j - 1 if odd else i + j),
            )
    if not odd:
        for i in range(1, m + 1):
            value *= Fraction(2 * b + 1 - 2 * k[i - 1], i)
    if value.denominator != 1:
        raise ValueError(f"2-перечисление не целое: {value}")
    return int(value)


def q_weight_exponent_shift(n: int, q_exp: int) -> int:
    """Показатель q-веса по показателю Q-веса: m + ⌊n/2⌋."""
    return q_exp + n // 2


def corrected_exponent_shift(n: int, q_exp: int) -> int:
    """
    Показатель q-веса с наблюдаемым сдвигом ⌈n/2⌉.

    Для чётного n совпадает с q_weight_exponent_shift, для нечётного
    больше на 1.
    """
    return q_exp + (n + 1) // 2


class ShiftRecord(BaseModel):
    rows: list[list[int]] = Field(..., description="Строки треугольника сверху вниз")
    q_exp: int = Field(..., description="Показатель Q-веса (особые элементы)")
    predicted: int = Field(..., description="m + ⌊n/2⌋")
    observed: int = Field(..., description="Число элементов, которых нет строкой выше")


class ShiftReport(BaseModel):
    """Сравнение показателя m + ⌊n/2⌋ с q-весом по определению"""
    n: int
    b: int
    k: list[int]
    total: int = Field(0, description="Число треугольников")
    multisets_agree: bool = Field(True, description="Совпадают ли мультимножества показателей")
    observed_shifts: list[int] = Field(default_factory=list, description="Наблюдаемые значения q-вес минус m")
    observed_shift: Optional[int] = Field(None, description="Общий сдвиг всех треугольников, если он один")
    corrected_agree: bool = Field(True, description="Совпадают ли мультимножества при сдвиге ⌈n/2⌉")
    flagged: list[ShiftRecord] = Field(default_factory=list, description="Треугольники, где сдвиг не совпал")


def exponent_shift_report(n: int, b: int, k: Sequence[int]) -> ShiftReport:
    """
    Перебирает HMT порядка n и сравнивает m + ⌊n/2⌋ с q-весом.

    Расхождения не считаются ошибкой: они попадают в flagged. Для
    нечётного n наблюдаемый сдвиг равен ⌈n/2⌉, а не ⌊n/2⌋; поправленный
    прогноз проверяется в corrected_agree.
    """
    report = ShiftReport(n=n, b=b, k=list(k))
    predicted_counter: Counter = Counter()
    corrected_counter: Counter = Counter()
    observed_counter: Counter = Counter()
    shifts = set()
    for pattern, weight in enumerate_halved_patterns(n, b, list(k)):
        predicted = q_weight_exponent_shift(n, weight.q_exp)
        observed = pattern_q_weight_new_entries(pattern)
        predicted_counter[predicted] += 1
        corrected_counter[corrected_exponent_shift(n, weight.q_exp)] += 1
        observed_counter[observed] += 1
        shifts.add(observed - weight.q_exp)
        report.total += 1
        if predicted != observed:
            report.flagged.append(ShiftRecord(
                rows=[list(r) for r in pattern.rows_top_down()],
                q_exp=weight.q_exp,
                predicted=predicted,
                observed=observed,
            ))
    report.multisets_agree = predicted_counter == observed_counter
    report.corrected_agree = corrected_counter == observed_counter
    report.observed_shifts = sorted(shifts)
    if len(shifts) == 1:
        report.observed_shift = report.observed_shifts[0]
    if report.flagged:
        logger.warning(
            f"Сдвиг m+⌊n/2⌋ не подтверждён для n={n}, b={b}, k={list(k)}: "
            f"{len(report.flagged)} из {report.total}, наблюдаемые сдвиги {report.observed_shifts}, "
            f"сдвиг ⌈n/2⌉ {'подтверждён' if report.corrected_agree else 'тоже не подтверждён'}"
        )
    return report

"""
Половинные схемы Гельфанда-Цетлина: пути Линдстрёма-Гесселя-Вьенно
и параметры области для разбиений ромбами.

Функции:
- lgv_endpoints(): начальные и конечные точки путей
- lgv_count(): определитель числа семейств непересекающихся путей
- gt_pattern_paths(): семейство путей конкретной схемы
- lozenge_region(): параметры четвертинки шестиугольника
"""

import logging
from typing import Sequence

from pydantic import BaseModel, Field

from formulas.determinants import binomial, rational_det
from objects import HalvedPattern, InvalidObjectError, check_pattern

logger = logging.getLogger(__name__)

Point = tuple[int, int]


def _check_bottom(n: int, b: int, k: Sequence[int]) -> list[int]:
    k = [int(x) for x in k]
    m = (n + 1) // 2
    if len(k) != m:
        raise InvalidObjectError(f"Длина k={k} != ⌈n/2⌉={m}")
    if any(x > y for x, y in zip(k, k[1:])) or (k and k[-1] > b):
        raise InvalidObjectError(f"Нужна нестрого возрастающая нижняя строка <= b: k={k}, b={b}")
    return k


def lgv_endpoints(n: int, b: int, k: Sequence[int]) -> list[tuple[Point, Point]]:
    """Пары (S_i, E_i): S_i = (0, k_i+i-1), E_i = (n+1-2i, b+i-1)."""
    k = _check_bottom(n, b, k)
    return [((0, k_i + i - 1), (n + 1 - 2 * i, b + i - 1)) for i, k_i in enumerate(k, start=1)]


def lgv_count(n: int, b: int, k: Sequence[int]) -> int:
    """
    Число половинных схем Гельфанда-Цетлина:
    det binom(n+b+1-k_i-i-j, n+1-2j).
    """
    k = _check_bottom(n, b, k)
    m = len(k)
    matrix = [
        [binomial(n + b + 1 - k[i - 1] - i - j, n + 1 - 2 * j) for j in range(1, m + 1)]
        for i in range(1, m + 1)
    ]
    value = rational_det(matrix)
    if value.denominator != 1:
        raise ArithmeticError(f"Определитель путей не целый: {value}")
    return int(value)


def gt_pattern_paths(pattern: HalvedPattern, b: int) -> list[list[Point]]:
    """
    Семейство путей схемы: путь i идёт от S_i до E_i, горизонтальный шаг t
    на высоте a_{n-t,i} + i - 1, вертикальные шаги перед горизонтальными.

    Raises:
        InvalidObjectError: схема некорректна, усечена или пути пересекаются
    """
    if any(pattern.shape.full_s):
        raise InvalidObjectError("Пути строятся только для неусечённых схем")
    problems = check_pattern(pattern.model_copy(update={"b": b}))
    if problems:
        raise InvalidObjectError(f"Схема некорректна: {problems[0]}")
    n = pattern.n
    paths = []
    for i in range(1, pattern.shape.m + 1):
        x, y = 0, pattern.entry(n, i) + i - 1
        path = [(x, y)]
        for t in range(1, n + 2 - 2 * i):
            height = pattern.entry(n - t, i) + i - 1
            while y < height:
                y += 1
                path.append((x, y))
            x += 1
            path.append((x, y))
        while y < b + i - 1:
            y += 1
            path.append((x, y))
        paths.append(path)
    seen: dict[Point, int] = {}
    for index, path in enumerate(paths, start=1):
        for point in path:
            if point in seen:
                raise InvalidObjectError(f"Пути {seen[point]} и {index} пересекаются в {point}")
            seen[point] = index
    return paths


class LozengeRegion(BaseModel):
    """Область H_{s,t}(d_1, …): боковая сторона s, верхняя t, удалённые позиции d"""
    s: int = Field(..., ge=0)
    t: int = Field(..., ge=0)
    removed: list[int] = Field(..., description="Позиции удалённых треугольников")


def lozenge_region(n: int, b: int, k: Sequence[int]) -> LozengeRegion:
    """H_{n, b-k_1}(1, k_2+2-k_1, …, k_m+m-k_1)."""
    k = _check_bottom(n, b, k)
    if not k:
        return LozengeRegion(s=n, t=0, removed=[])
    return LozengeRegion(
        s=n,
        t=b - k[0],
        removed=[k_i + i - k[0] for i, k_i in enumerate(k, start=1)],
    )

"""
Половинные монотонные треугольники, s-деревья и схемы Гельфанда-Цетлина.

Функции:
- check_pattern(): список нарушений локальных неравенств
- pattern_weight(): Q-вес (особые элементы) и P-вес (равные нижние пары)
- enumerate_halved_patterns(): перебор заполнений усечённой формы
- genfun_from_list(): производящая функция списка с весами
- pattern_q_weight_new_entries(): q-вес «элементы строки, которых нет строкой выше»
"""

import logging
from typing import Iterable, Optional, Sequence

from algebra import Coefficient
from objects.budget import NodeBudget
from objects.models import (
    HalvedPattern,
    HalvedShape,
    InvalidObjectError,
    PatternMode,
    WeightMonomial,
)

logger = logging.getLogger(__name__)


def check_pattern(pattern: HalvedPattern) -> list[str]:
    """
    Проверяет неравенства между присутствующими соседями.

    Строки: строго (strict) или нестрого (weak) возрастают.
    Диагонали: a_{i+1,j} <= a_{i,j} <= a_{i+1,j+1}. Все элементы <= b.
    """
    problems = []
    strict = pattern.mode == PatternMode.STRICT_ROWS
    a = pattern.entry
    for i in range(1, pattern.n + 1):
        for j in range(1, (i + 1) // 2 + 1):
            value = a(i, j)
            if value is None:
                continue
            if pattern.b is not None and value > pattern.b:
                problems.append(f"a({i},{j})={value} > b={pattern.b}")
            right = a(i, j + 1)
            if right is not None and (value >= right if strict else value > right):
                problems.append(f"строка {i}: a({i},{j})={value}, a({i},{j + 1})={right}")
            below_left, below_right = a(i + 1, j), a(i + 1, j + 1)
            if below_left is not None and below_left > value:
                problems.append(f"диагональ {j}: a({i + 1},{j})={below_left} > a({i},{j})={value}")
            if below_right is not None and value > below_right:
                problems.append(f"a({i},{j})={value} > a({i + 1},{j + 1})={below_right}")
    return problems


def is_special(pattern: HalvedPattern, i: int, j: int) -> bool:
    """a_{i,j} особый: a_{i+1,j} < a_{i,j} (< a_{i+1,j+1}, если он есть)."""
    value = pattern.entry(i, j)
    below_left = pattern.entry(i + 1, j)
    if value is None or below_left is None or not below_left < value:
        return False
    below_right = pattern.entry(i + 1, j + 1)
    return below_right is None or value < below_right


def pattern_weight(pattern: HalvedPattern) -> WeightMonomial:
    """
    Вес дерева.

    P считает диагонали, где два нижних элемента равны; диагональ из
    одного элемента P-вес не даёт.
    """
    q_exp = sum(
        1
        for i in range(1, pattern.n + 1)
        for j in range(1, (i + 1) // 2 + 1)
        if is_special(pattern, i, j)
    )
    return WeightMonomial(q_exp=q_exp, p_exp=len(equal_bottom_pairs(pattern)))


def equal_bottom_pairs(pattern: HalvedPattern) -> set[int]:
    """Диагонали (с 1), у которых две нижние клетки равны."""
    shape = pattern.shape
    result = set()
    for j in range(1, shape.m + 1):
        bottom = shape.bottom_row_of(j)
        if bottom - 1 >= 2 * j - 1 and pattern.entry(bottom, j) == pattern.entry(bottom - 1, j):
            result.add(j)
    return result


def enumerate_halved_patterns(
    n: int,
    b: int,
    bottom: Sequence[int],
    s: Sequence[int] = (),
    mode: PatternMode = PatternMode.STRICT_ROWS,
) -> list[tuple[HalvedPattern, WeightMonomial]]:
    """
    Все заполнения формы (n, s) с нижней строкой bottom и элементами <= b.

    Поиск в глубину: строки снизу вверх, ячейки слева направо, значения
    по возрастанию. Нижняя ячейка диагонали j фиксирована значением k_j.

    Args:
        n: порядок (число строк)
        b: верхняя граница
        bottom: k_1…k_⌈n/2⌉
        s: вектор усечения
        mode: строгие или нестрогие строки

    Raises:
        InvalidObjectError: неверная форма или немонотонная нижняя строка
        ResourceBoundError: превышен бюджет узлов
    """
    shape = _make_shape(n, s)
    m = shape.m
    bottom = [int(k) for k in bottom]
    if len(bottom) != m:
        raise InvalidObjectError(f"Длина нижней строки {len(bottom)} != ⌈n/2⌉={m}")
    strict = mode == PatternMode.STRICT_ROWS
    if not any(shape.full_s):
        pairs = zip(bottom, bottom[1:])
        if any((x >= y) if strict else (x > y) for x, y in pairs):
            raise InvalidObjectError(f"Нижняя строка {bottom} не возрастает")

    budget = NodeBudget(f"enumerate_halved_patterns(n={n}, s={list(s)})")
    # cells[i][j-1] для i = 1…n
    cells: list[list[Optional[int]]] = [[]] + [[None] * ((i + 1) // 2) for i in range(1, n + 1)]
    order = [
        (i, j)
        for i in range(n, 0, -1)
        for j in range(1, (i + 1) // 2 + 1)
        if shape.is_present(i, j)
    ]
    result = []

    def get(i: int, j: int) -> Optional[int]:
        if i > n or j < 1 or j > (i + 1) // 2:
            return None
        return cells[i][j - 1]

    def search(position: int) -> None:
        budget.tick()
        if position == len(order):
            pattern = HalvedPattern(
                n=n,
                s=list(s),
                mode=mode,
                rows_bottom_up=[list(cells[i]) for i in range(n, 0, -1)],
                b=b,
            )
            result.append((pattern, pattern_weight(pattern)))
            return
        i, j = order[position]
        low, high = None, b
        below_left, below_right, left = get(i + 1, j), get(i + 1, j + 1), get(i, j - 1)
        if below_left is not None:
            low = below_left
        if left is not None:
            bound = left + 1 if strict else left
            low = bound if low is None else max(low, bound)
        if below_right is not None:
            high = min(high, below_right)
        if i == shape.bottom_row_of(j):
            candidates: Iterable[int] = [bottom[j - 1]]
        else:
            if low is None:
                raise InvalidObjectError(f"Ячейка ({i},{j}) не ограничена снизу")
            candidates = range(low, high + 1)
        for value in candidates:
            if value > high or (low is not None and value < low):
                continue
            cells[i][j - 1] = value
            search(position + 1)
        cells[i][j - 1] = None

    search(0)
    logger.debug(f"Заполнений формы n={n}, s={list(s)}: {len(result)}, узлов: {budget.nodes}")
    return result


def _make_shape(n: int, s: Sequence[int]) -> HalvedShape:
    try:
        return HalvedShape(n=n, s=list(s))
    except InvalidObjectError:
        raise
    except ValueError as e:
        raise InvalidObjectError(f"Некорректная форма (n={n}, s={list(s)}): {e}")


def genfun_from_list(items: Iterable[tuple[object, Optional[WeightMonomial]]]) -> Coefficient:
    """Сумма Q^q P^p по списку (объект, вес)."""
    terms: dict[tuple[int, int], int] = {}
    for _, weight in items:
        key = (weight.q_exp, weight.p_exp)
        terms[key] = terms.get(key, 0) + 1
    return Coefficient(terms)


def pattern_q_weight_new_entries(pattern: HalvedPattern) -> int:
    """
    Число элементов, которые есть в строке, но отсутствуют в строке выше.

    Верхняя строка всегда даёт 1.
    """
    total = 0
    previous: set[int] = set()
    for row in pattern.rows_top_down():
        current = {v for v in row if v is not None}
        total += len(current - previous)
        previous = current
    return total

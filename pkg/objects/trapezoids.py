"""
Знакочередующиеся трапеции: проверка, перебор, симметрия, веса.

Функции:
- validate_trapezoid(): независимая проверка четырёх условий определения
- enumerate_astrapezoids(): все (n, l)-трапеции
- is_vertically_symmetric(): симметрия относительно вертикальной оси
- classify_columns(): 0-, 10- и 11-столбцы, вектор 1-столбцов c
- central_column(): центральный столбец (l нечётно)
- vsast_weight(): Q- и P-вес вертикально симметричной трапеции
- enumerate_vsast(): симметричные трапеции с весами
- delete_bottom_row_n1(): (n,1) или треугольник -> (n-1,3)
- enumerate_as_triangles(): знакочередующиеся треугольники порядка n
"""

import logging
from typing import Iterator, Optional

from objects.budget import NodeBudget
from objects.models import (
    ASTrapezoid,
    ColumnClass,
    ColumnTag,
    InvalidObjectError,
    WeightMonomial,
)

logger = logging.getLogger(__name__)


# === Проверка ===

def validate_trapezoid(n: int, l: int, rows: list[list[int]]) -> list[str]:
    """
    Проверяет условия определения трапеции.

    Returns:
        Список нарушений (пустой — трапеция корректна)
    """
    problems = []
    width = 2 * n + l - 2
    if len(rows) != n:
        return [f"ожидалось {n} строк"]
    for i, row in enumerate(rows):
        if len(row) != width - 2 * i:
            return [f"строка {i}: неверная длина"]
        if any(e not in (-1, 0, 1) for e in row):
            problems.append(f"строка {i}: элементы вне {{-1,0,1}}")

    # 1. Чередование знаков в строках
    for i, row in enumerate(rows):
        nonzero = [e for e in row if e]
        if any(a == b for a, b in zip(nonzero, nonzero[1:])):
            problems.append(f"строка {i}: знаки не чередуются")
        total = sum(row)
        if l == 1 and i == n - 1:
            if total not in (0, 1):
                problems.append(f"строка {i}: сумма {total} вне {{0,1}}")
        elif total != 1:
            problems.append(f"строка {i}: сумма {total} != 1")

    # 2. Чередование в столбцах, верхний ненулевой элемент равен 1
    for g in range(width):
        last = min(g, width - 1 - g, n - 1)
        nonzero = [rows[i][g - i] for i in range(last + 1) if rows[i][g - i]]
        if nonzero and nonzero[0] != 1:
            problems.append(f"столбец {g}: верхний ненулевой элемент не 1")
        if any(a == b for a, b in zip(nonzero, nonzero[1:])):
            problems.append(f"столбец {g}: знаки не чередуются")

    # 3. Центральные l-2 столбцов в сумме дают 0
    for g in range(n, n + l - 2):
        column_sum = sum(rows[i][g - i] for i in range(min(g, width - 1 - g, n - 1) + 1))
        if column_sum != 0:
            problems.append(f"центральный столбец {g}: сумма {column_sum} != 0")
    return problems


# === Перебор ===

def enumerate_astrapezoids(n: int, l: int) -> list[ASTrapezoid]:
    """
    Все (n, l)-трапеции.

    Перебор строк сверху вниз с частичными суммами столбцов в {0, 1};
    внутри строки частичные суммы слева направо тоже в {0, 1}.
    Порядок лексикографический по строкам сверху вниз.

    Raises:
        InvalidObjectError: n < 1 или l < 1
        ResourceBoundError: превышен бюджет узлов
    """
    _check_nl(n, l)
    budget = NodeBudget(f"enumerate_astrapezoids({n},{l})")
    width = 2 * n + l - 2
    result = []
    for rows in _search(n, l, width, [0] * width, [], budget, symmetric=False):
        result.append(ASTrapezoid(n=n, l=l, rows=rows))
    logger.debug(f"({n},{l})-трапеций: {len(result)}, узлов: {budget.nodes}")
    return result


def _search(n, l, width, columns, rows, budget, symmetric) -> Iterator[list[list[int]]]:
    i = len(rows)
    if i == n:
        if all(columns[g] == 0 for g in range(n, n + l - 2)):
            yield [list(r) for r in rows]
        return
    last_row = i == n - 1
    row_builder = _symmetric_rows if symmetric else _rows
    for row in row_builder(i, width, columns, l == 1 and last_row, budget):
        for offset, e in enumerate(row):
            columns[i + offset] += e
        rows.append(row)
        yield from _search(n, l, width, columns, rows, budget, symmetric)
        rows.pop()
        for offset, e in enumerate(row):
            columns[i + offset] -= e


def _rows(i, width, columns, allow_zero_sum, budget) -> Iterator[list[int]]:
    """Допустимые строки i при текущих суммах столбцов."""
    start, stop = i, width - i
    row: list[int] = []

    def extend(g: int, prefix: int) -> Iterator[list[int]]:
        budget.tick()
        if g == stop:
            if prefix == 1 or allow_zero_sum:
                yield list(row)
            return
        options = (-1, 0) if prefix == 1 else (0, 1)
        for e in options:
            if columns[g] + e not in (0, 1):
                continue
            row.append(e)
            yield from extend(g + 1, prefix + e)
            row.pop()

    yield from extend(start, 0)


def _symmetric_rows(i, width, columns, allow_zero_sum, budget) -> Iterator[list[int]]:
    """Палиндромные строки: левая половина, центр 1-2L, зеркало."""
    center = (width - 1) // 2
    half: list[int] = []

    def extend(g: int, prefix: int) -> Iterator[list[int]]:
        budget.tick()
        if g == center:
            middle = 1 - 2 * prefix
            candidates = [middle]
            if allow_zero_sum and prefix == 0:
                candidates = [0, 1]
            for e0 in candidates:
                if columns[center] + e0 in (0, 1):
                    yield half + [e0] + half[::-1]
            return
        options = (-1, 0) if prefix == 1 else (0, 1)
        for e in options:
            if columns[g] + e not in (0, 1):
                continue
            half.append(e)
            yield from extend(g + 1, prefix + e)
            half.pop()

    yield from extend(i, 0)


def _check_nl(n: int, l: int) -> None:
    if n < 1 or l < 1:
        raise InvalidObjectError(f"Нужно n >= 1 и l >= 1, получено n={n}, l={l}")


# === Симметрия и столбцы ===

def is_vertically_symmetric(t: ASTrapezoid) -> bool:
    return all(row == row[::-1] for row in t.rows)


def classify_columns(t: ASTrapezoid) -> ColumnClass:
    """Типы столбцов и вектор 1-столбцов c (позиции g-n для g < n)."""
    tags = []
    for g in range(t.width):
        column = t.column(g)
        if sum(column) == 0:
            tags.append(ColumnTag.ZERO)
        elif column[-1] == 1:
            tags.append(ColumnTag.ONE1)
        else:
            tags.append(ColumnTag.ONE0)
    c = [g - t.n for g in range(t.n) if tags[g] != ColumnTag.ZERO]
    return ColumnClass(tags=tags, c=c)


def central_column(t: ASTrapezoid) -> list[int]:
    if t.width % 2 == 0:
        raise InvalidObjectError("У трапеции с чётной шириной нет центрального столбца")
    return t.column((t.width - 1) // 2)


def vsast_weight(t: ASTrapezoid) -> WeightMonomial:
    """
    Вес симметричной трапеции.

    Q — число -1 в n-1+(l-1)/2 левых столбцах,
    P — число 10-столбцов среди n-1 левых столбцов.

    Raises:
        InvalidObjectError: трапеция не симметрична
    """
    if not is_vertically_symmetric(t):
        raise InvalidObjectError("Вес определён только для симметричных трапеций")
    q_columns = t.n - 1 + (t.l - 1) // 2
    q_exp = sum(
        1
        for g in range(q_columns)
        for e in t.column(g)
        if e == -1
    )
    tags = classify_columns(t).tags
    p_exp = sum(1 for g in range(t.n - 1) if tags[g] == ColumnTag.ONE0)
    return WeightMonomial(q_exp=q_exp, p_exp=p_exp)


def enumerate_vsast(n: int, l: int) -> list[tuple[ASTrapezoid, WeightMonomial]]:
    """
    Вертикально симметричные (n, l)-трапеции с весами.

    Строки строятся сразу палиндромными; результат совпадает с фильтром
    enumerate_astrapezoids по симметрии (в том же порядке).

    Raises:
        InvalidObjectError: чётное l
    """
    _check_nl(n, l)
    if l % 2 == 0:
        raise InvalidObjectError(f"Симметричных трапеций с чётным l={l} не бывает")
    if l >= 3 and n % 2 == 1:
        logger.warning(f"При l={l} >= 3 и нечётном n={n} симметричных трапеций нет")
        return []
    budget = NodeBudget(f"enumerate_vsast({n},{l})")
    width = 2 * n + l - 2
    result = []
    for rows in _search(n, l, width, [0] * width, [], budget, symmetric=True):
        t = ASTrapezoid(n=n, l=l, rows=rows)
        result.append((t, vsast_weight(t)))
    logger.debug(f"Симметричных ({n},{l})-трапеций: {len(result)}")
    return result


# === Нижняя строка (n, 1) ===

def delete_bottom_row_n1(t: ASTrapezoid) -> ASTrapezoid:
    """
    Удаляет нижнюю строку длины 1: (n,1) -> (n-1,3).

    Raises:
        InvalidObjectError: не (n,1)-трапеция нечётного порядка n >= 3,
            трапеция не симметрична или не удовлетворяет определению
    """
    if t.l != 1 or t.n < 2:
        raise InvalidObjectError(f"Нужна (n,1)-трапеция с n >= 2, получено ({t.n},{t.l})")
    if t.n % 2 == 0:
        raise InvalidObjectError(f"Порядок {t.n} чётный: симметричных (n-1,3)-трапеций нечётного порядка нет")
    if not is_vertically_symmetric(t):
        raise InvalidObjectError(f"({t.n},1)-трапеция не симметрична относительно вертикальной оси")
    problems = validate_trapezoid(t.n, 1, [list(r) for r in t.rows])
    if problems:
        raise InvalidObjectError(f"Не (n,1)-трапеция: {problems[0]}")
    rows = [list(r) for r in t.rows[:-1]]
    problems = validate_trapezoid(t.n - 1, 3, rows)
    if problems:
        raise InvalidObjectError(f"После удаления нижней строки: {problems[0]}")
    return ASTrapezoid(n=t.n - 1, l=3, rows=rows)


def enumerate_as_triangles(n: int, symmetric: bool = False) -> list[tuple[ASTrapezoid, Optional[WeightMonomial]]]:
    """
    Знакочередующиеся треугольники порядка n: (n,1)-трапеции с нижним элементом 1.

    Вес симметричного треугольника — вес (n-1,3)-трапеции без нижней строки;
    у треугольника порядка 1 вес единичный. Несимметричным вес не присваивается.
    """
    source = enumerate_vsast(n, 1) if symmetric else [(t, None) for t in enumerate_astrapezoids(n, 1)]
    result = []
    for t, _ in source:
        if t.rows[-1][0] != 1:
            continue
        weight = None
        if symmetric:
            weight = WeightMonomial() if n == 1 else vsast_weight(delete_bottom_row_n1(t))
        result.append((t, weight))
    return result

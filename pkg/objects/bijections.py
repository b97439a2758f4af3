"""
Биекции: симметричные трапеции <-> половинные деревья, VSASM -> HMT.

Функции:
- vsast_to_tree(): симметричная (n,l)-трапеция -> половинное дерево
- tree_to_vsast(): обратное отображение
- vsasm_to_hmt(): VSASM нечётного размера -> половинный монотонный треугольник
- enumerate_vsasm(): перебор вертикально симметричных ASM
"""

import logging
from typing import Optional, Sequence

from objects.budget import NodeBudget
from objects.models import ASTrapezoid, HalvedPattern, InvalidObjectError
from objects.patterns import check_pattern
from objects.trapezoids import classify_columns, is_vertically_symmetric, validate_trapezoid

logger = logging.getLogger(__name__)


# === Трапеции и деревья ===

def vsast_to_tree(t: ASTrapezoid) -> HalvedPattern:
    """
    Симметричная (n, l)-трапеция -> половинное (-c_1-1, …)-дерево.

    Левая половина с центром дополняется нулями до прямоугольника
    n × (n+(l-1)/2) со столбцами -n…(l-3)/2, элементы заменяются частичными
    суммами столбцов, позиции единиц записываются по строкам. Удаляется
    первая строка, правый столбец (l-3)/2 и элементы из дополненных нулей.

    Returns:
        Дерево порядка n-1 с нижней строкой c и элементами <= (l-5)/2

    Raises:
        InvalidObjectError: трапеция не симметрична, n нечётно или l < 3
    """
    n, l = t.n, t.l
    if not is_vertically_symmetric(t) or n % 2 or l % 2 == 0 or l < 3:
        raise InvalidObjectError(f"Нужна симметричная (n,l)-трапеция с чётным n и нечётным l >= 3")
    right = (l - 3) // 2
    columns = range(-n, right + 1)
    sums = {c: 0 for c in columns}
    positions = []
    for i in range(n):
        for c in columns:
            g = c + n
            if g >= i:
                sums[c] += t.rows[i][g - i]
        positions.append([c for c in columns if sums[c] == 1])

    c_vector = classify_columns(t).c
    s = [-c - 1 for c in c_vector]
    order = n - 1
    rows_bottom_up = []
    for r in range(order, 0, -1):
        old = r + 1
        kept = [c for c in positions[old - 1] if c > -n + old - 2]
        if old % 2 == 1:
            if not kept or kept[-1] != right:
                raise InvalidObjectError(f"Строка {old}: нет элемента {right} в правом столбце")
            kept = kept[:-1]
        length = (r + 1) // 2
        if len(kept) > length:
            raise InvalidObjectError(f"Строка {r} дерева длиннее формы")
        rows_bottom_up.append([None] * (length - len(kept)) + kept)
    pattern = HalvedPattern(n=order, s=s, rows_bottom_up=rows_bottom_up, b=(l - 5) // 2)
    if pattern.bottom_row != c_vector:
        raise InvalidObjectError(f"Нижняя строка {pattern.bottom_row} != c={c_vector}")
    return pattern


def tree_to_vsast(p: HalvedPattern, l: int) -> ASTrapezoid:
    """
    Обратное к vsast_to_tree.

    Усечённые ячейки диагонали j заполняются значением c_j, к нечётным
    строкам исходной формы добавляется (l-3)/2, по частичным суммам
    восстанавливается левая половина и центр, затем зеркало.

    Raises:
        InvalidObjectError: дерево не лежит в образе биекции
    """
    if l % 2 == 0 or l < 3 or p.n % 2 == 0:
        raise InvalidObjectError(f"Нужно нечётное l >= 3 и дерево нечётного порядка")
    problems = check_pattern(p)
    if problems:
        raise InvalidObjectError(f"Дерево некорректно: {problems[0]}")
    n = p.n + 1
    right = (l - 3) // 2
    c_vector = p.bottom_row
    if p.shape.full_s != [-c - 1 for c in c_vector]:
        raise InvalidObjectError(f"Усечение {p.s} не соответствует нижней строке {c_vector}")

    partial_rows = [[right]]
    for old in range(2, n + 1):
        row = p.rows_top_down()[old - 2]
        filled = [c_vector[j] if v is None else v for j, v in enumerate(row)]
        if old % 2 == 1:
            filled.append(right)
        partial_rows.append(filled)

    width = 2 * n + l - 2
    center = n + right
    previous = {c: 0 for c in range(-n, right + 1)}
    rows = []
    for i, ones in enumerate(partial_rows):
        current = {c: 0 for c in range(-n, right + 1)}
        for c in ones:
            if c not in current:
                raise InvalidObjectError(f"Позиция {c} вне столбцов -{n}…{right}")
            current[c] = 1
        half = [current[g - n] - previous[g - n] for g in range(i, center)]
        middle = current[right] - previous[right]
        if any(current[g - n] != previous[g - n] for g in range(0, i)):
            raise InvalidObjectError(f"Строка {i}: изменение в дополненной области")
        rows.append(half + [middle] + half[::-1])
        previous = current

    problems = validate_trapezoid(n, l, rows)
    if problems or any(len(r) != width - 2 * i for i, r in enumerate(rows)):
        raise InvalidObjectError(f"Дерево не лежит в образе биекции: {problems[:1]}")
    return ASTrapezoid(n=n, l=l, rows=rows)


# === VSASM ===

def _is_vsasm(matrix: Sequence[Sequence[int]]) -> bool:
    size = len(matrix)
    if size % 2 == 0 or any(len(r) != size for r in matrix):
        return False
    for line in list(matrix) + [list(col) for col in zip(*matrix)]:
        nonzero = [e for e in line if e]
        if sum(line) != 1 or any(e not in (-1, 1) for e in nonzero):
            return False
        if nonzero[0] != 1 or any(a == b for a, b in zip(nonzero, nonzero[1:])):
            return False
    return all(list(r) == list(r)[::-1] for r in matrix)


def vsasm_to_hmt(matrix: Sequence[Sequence[int]]) -> HalvedPattern:
    """
    VSASM размера N -> HMT порядка N-1 с нижней строкой (1,…,(N-1)/2).

    Частичные суммы столбцов, (N+1)/2 правых столбцов отбрасываются,
    позиции единиц (с 1) строк 2…N образуют треугольник.

    Raises:
        InvalidObjectError: матрица не VSASM
    """
    if not _is_vsasm(matrix):
        raise InvalidObjectError("Матрица не является вертикально симметричной ASM")
    size = len(matrix)
    half = (size - 1) // 2
    sums = [0] * half
    rows = []
    for row in matrix:
        for j in range(half):
            sums[j] += row[j]
        rows.append([j + 1 for j in range(half) if sums[j] == 1])
    rows_top_down = rows[1:]
    return HalvedPattern(n=size - 1, rows_bottom_up=rows_top_down[::-1], b=half)


def enumerate_vsasm(size: int, budget: Optional[NodeBudget] = None) -> list[list[list[int]]]:
    """
    Все вертикально симметричные ASM размера size (нечётного).

    Строки частичных сумм — палиндромные 0/1-векторы с i единицами,
    разность соседних строк чередуется в знаках и начинается с +1.
    """
    if size < 1 or size % 2 == 0:
        raise InvalidObjectError(f"Размер VSASM должен быть нечётным: {size}")
    budget = budget or NodeBudget(f"enumerate_vsasm({size})")
    half = (size - 1) // 2
    result = []

    def palindromes(ones: int) -> list[list[int]]:
        # левая половина с h единицами, центр = ones - 2h
        out = []
        for mask in range(1 << half):
            h = bin(mask).count("1")
            middle = ones - 2 * h
            if middle not in (0, 1):
                continue
            left = [(mask >> (half - 1 - j)) & 1 for j in range(half)]
            out.append(left + [middle] + left[::-1])
        return out

    def extend(partials: list[list[int]]) -> None:
        budget.tick()
        i = len(partials)
        if i == size:
            matrix = [
                [cur - prev for cur, prev in zip(partials[r], partials[r - 1] if r else [0] * size)]
                for r in range(size)
            ]
            result.append(matrix)
            return
        previous = partials[-1] if partials else [0] * size
        for candidate in palindromes(i + 1):
            diff = [a - b for a, b in zip(candidate, previous)]
            nonzero = [d for d in diff if d]
            if nonzero[0] != 1 or any(a == b for a, b in zip(nonzero, nonzero[1:])):
                continue
            extend(partials + [candidate])

    extend([])
    return result

"""
Pydantic модели комбинаторных объектов.

Модели:
- WeightMonomial: вес Q^q P^p
- ASTrapezoid: знакочередующаяся трапеция (n, l)
- ColumnTag, ColumnClass: классификация столбцов
- HalvedShape: форма половинного треугольника с усечением s
- PatternMode: строгие (монотонные треугольники) или нестрогие (GT) строки
- HalvedPattern: заполнение половинной формы
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class InvalidObjectError(ValueError):
    """Нарушены предусловия объекта или формы"""
    pass


class WeightMonomial(BaseModel):
    """Вес объекта: Q^q_exp · P^p_exp"""
    q_exp: int = Field(0, ge=0, description="Степень Q")
    p_exp: int = Field(0, ge=0, description="Степень P")

    model_config = {"frozen": True}


class ASTrapezoid(BaseModel):
    """
    (n, l)-трапеция: строки длины 2n+l-2, 2n+l-4, …, l.

    Строка i (с нуля) занимает столбцы [i, W-1-i] общей сетки ширины
    W = 2n+l-2. Столбцы 0…n-1 сетки — это столбцы -n…-1.
    """
    n: int = Field(..., ge=1, description="Число строк")
    l: int = Field(..., ge=1, description="Длина нижней строки")
    rows: list[list[int]] = Field(..., description="Строки сверху вниз")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_shape(self) -> "ASTrapezoid":
        if len(self.rows) != self.n:
            raise InvalidObjectError(f"Ожидалось {self.n} строк, получено {len(self.rows)}")
        for i, row in enumerate(self.rows):
            expected = self.width - 2 * i
            if len(row) != expected:
                raise InvalidObjectError(f"Строка {i}: длина {len(row)}, ожидалась {expected}")
            if any(e not in (-1, 0, 1) for e in row):
                raise InvalidObjectError(f"Строка {i}: элементы вне {{-1, 0, 1}}")
        return self

    @property
    def width(self) -> int:
        return 2 * self.n + self.l - 2

    def entry(self, i: int, g: int) -> Optional[int]:
        """Элемент строки i в столбце сетки g (None вне трапеции)."""
        if g < i or g > self.width - 1 - i:
            return None
        return self.rows[i][g - i]

    def column(self, g: int) -> list[int]:
        """Элементы столбца g сверху вниз."""
        return [self.rows[i][g - i] for i in range(self.column_last_row(g) + 1)]

    def column_last_row(self, g: int) -> int:
        return min(g, self.width - 1 - g, self.n - 1)

    def key(self) -> tuple:
        return (self.n, self.l, tuple(tuple(r) for r in self.rows))


class ColumnTag(str, Enum):
    """Тип столбца"""
    ZERO = "zero"   # сумма 0
    ONE0 = "one0"   # 10-столбец: сумма 1, нижний элемент 0
    ONE1 = "one1"   # 11-столбец: сумма 1, нижний элемент 1


class ColumnClass(BaseModel):
    """Классификация всех столбцов трапеции и вектор 1-столбцов"""
    tags: list[ColumnTag] = Field(..., description="Тип каждого столбца сетки слева направо")
    c: list[int] = Field(..., description="Позиции 1-столбцов среди столбцов -n…-1")

    def counts(self, columns: Optional[range] = None) -> dict[ColumnTag, int]:
        selected = self.tags if columns is None else [self.tags[g] for g in columns]
        return {tag: selected.count(tag) for tag in ColumnTag}


class HalvedShape(BaseModel):
    """
    Форма половинного s-дерева порядка n.

    Диагональ j (с 1) занимает строки 2j-1…n; усечение убирает s_j нижних
    клеток, остаются строки 2j-1…n-s_j.
    """
    n: int = Field(..., ge=0, description="Число строк")
    s: list[int] = Field(default_factory=list, description="Вектор усечения")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_truncation(self) -> "HalvedShape":
        m = self.m
        if len(self.s) > m:
            trailing = self.s[m:]
            if any(trailing):
                raise InvalidObjectError(f"Вектор s длиннее ⌈n/2⌉={m}: {self.s}")
        s = self.full_s
        if any(x < 0 for x in s):
            raise InvalidObjectError(f"Отрицательное усечение: {self.s}")
        if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
            raise InvalidObjectError(f"Вектор s не убывает: {self.s}")
        for j, x in enumerate(s, start=1):
            if x > self.n + 1 - 2 * j:
                raise InvalidObjectError(f"Диагональ {j} усечена полностью: s_{j}={x}")
        return self

    @property
    def m(self) -> int:
        return (self.n + 1) // 2

    @property
    def full_s(self) -> list[int]:
        """s, дополненный нулями до длины ⌈n/2⌉."""
        s = list(self.s[: self.m])
        return s + [0] * (self.m - len(s))

    def row_length(self, i: int) -> int:
        return (i + 1) // 2

    def bottom_row_of(self, j: int) -> int:
        return self.n - self.full_s[j - 1]

    def is_present(self, i: int, j: int) -> bool:
        if not 1 <= j <= self.m:
            return False
        return 2 * j - 1 <= i <= self.bottom_row_of(j)


class PatternMode(str, Enum):
    """Режим строк"""
    STRICT_ROWS = "strict"  # монотонные треугольники и деревья
    WEAK_ROWS = "weak"      # половинные схемы Гельфанда-Цетлина


class HalvedPattern(BaseModel):
    """
    Заполнение половинной формы.

    rows_bottom_up[0] — строка n. Строка i содержит ⌈i/2⌉ ячеек
    (диагонали 1…⌈i/2⌉); усечённые ячейки равны None.
    """
    n: int = Field(..., ge=0)
    s: list[int] = Field(default_factory=list)
    mode: PatternMode = PatternMode.STRICT_ROWS
    rows_bottom_up: list[list[Optional[int]]] = Field(default_factory=list)
    b: Optional[int] = Field(None, description="Верхняя граница элементов")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_rows(self) -> "HalvedPattern":
        shape = self.shape
        if len(self.rows_bottom_up) != self.n:
            raise InvalidObjectError(f"Ожидалось {self.n} строк, получено {len(self.rows_bottom_up)}")
        for i in range(1, self.n + 1):
            row = self.rows_bottom_up[self.n - i]
            if len(row) != shape.row_length(i):
                raise InvalidObjectError(f"Строка {i}: длина {len(row)}, ожидалась {shape.row_length(i)}")
            for j, value in enumerate(row, start=1):
                if (value is None) == shape.is_present(i, j):
                    raise InvalidObjectError(f"Ячейка ({i},{j}) не соответствует форме")
        return self

    @property
    def shape(self) -> HalvedShape:
        return HalvedShape(n=self.n, s=self.s)

    def entry(self, i: int, j: int) -> Optional[int]:
        """a_{i,j}, нумерация строк сверху, диагоналей слева (с 1)."""
        if not 1 <= i <= self.n or not 1 <= j <= (i + 1) // 2:
            return None
        return self.rows_bottom_up[self.n - i][j - 1]

    @property
    def bottom_row(self) -> list[int]:
        """Нижние элементы диагоналей k_1…k_m."""
        shape = self.shape
        return [self.entry(shape.bottom_row_of(j), j) for j in range(1, shape.m + 1)]

    def rows_top_down(self) -> list[list[Optional[int]]]:
        return list(reversed(self.rows_bottom_up))

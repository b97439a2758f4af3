"""
Многочлены от нескольких целочисленных переменных над кольцом Coefficient.

Классы:
- MultiPoly: неизменяемый многочлен от упорядоченного списка переменных

Функции:
- poly_shift(): подстановка var -> var + amount
- poly_eval(): точное вычисление в целой точке
- binomial_poly(): binom(выражение, m) как многочлен
- poly_det(): определитель матрицы многочленов
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Sequence, Union

from algebra.coefficient import CoeffLike, Coefficient

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


class UnknownVariableError(ValueError):
    """Переменная не входит в список переменных многочлена"""
    pass


class MultiPoly:
    """
    Многочлен sum c_e * v_1^{e_1} … v_m^{e_m}.

    Все операнды операторных формул — объекты этого класса.
    Переменные — имена (k1, k2, …, b, l1, …).
    """

    __slots__ = ("_variables", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Exponent, CoeffLike]] = None,
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"Повторяющиеся переменные: {variables}")
        clean: dict[Exponent, Coefficient] = {}
        for exponent, value in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != len(variables) or any(e < 0 for e in exponent):
                raise ValueError(f"Некорректный вектор степеней {exponent} для {variables}")
            total = clean.get(exponent, Coefficient.zero()) + Coefficient.coerce(value)
            clean[exponent] = total
        self._variables = variables
        self._terms = {e: c for e, c in sorted(clean.items()) if not c.is_zero()}

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict[Exponent, Coefficient]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj._variables = variables
        obj._terms = {e: c for e, c in sorted(terms.items()) if not c.is_zero()}
        return obj

    # === Конструкторы ===

    @classmethod
    def constant(cls, variables: Sequence[str], value: CoeffLike) -> "MultiPoly":
        variables = tuple(variables)
        return cls._raw(variables, {(0,) * len(variables): Coefficient.coerce(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        if name not in variables:
            raise UnknownVariableError(f"Неизвестная переменная: {name}")
        exponent = tuple(1 if v == name else 0 for v in variables)
        return cls._raw(variables, {exponent: Coefficient.one()})

    @classmethod
    def linear(
        cls,
        variables: Sequence[str],
        coefficients: Mapping[str, Union[int, Fraction]],
        constant: Union[int, Fraction] = 0,
    ) -> "MultiPoly":
        """Линейная форма constant + sum a_v * v."""
        variables = tuple(variables)
        result = cls.constant(variables, Coefficient.const(constant))
        for name, a in coefficients.items():
            result = result + cls.variable(variables, name) * Coefficient.const(a)
        return result

    # === Доступ ===

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, name: Optional[str] = None) -> int:
        """Полная степень или степень по одной переменной; у нуля -1."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = self._index(name)
        return max(e[i] for e in self._terms)

    def _index(self, name: str) -> int:
        try:
            return self._variables.index(name)
        except ValueError:
            raise UnknownVariableError(f"Неизвестная переменная: {name} (есть {self._variables})")

    def _align(self, other: "MultiPoly") -> None:
        if self._variables != other._variables:
            raise UnknownVariableError(
                f"Разные списки переменных: {self._variables} и {other._variables}"
            )

    # === Арифметика ===

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._variables, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: Union["MultiPoly", CoeffLike]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self._variables, other)
        self._align(other)
        result = dict(self._terms)
        for e, c in other._terms.items():
            result[e] = result[e] + c if e in result else c
        return MultiPoly._raw(self._variables, result)

    __radd__ = __add__

    def __sub__(self, other: Union["MultiPoly", CoeffLike]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self._variables, other)
        return self + (-other)

    def __rsub__(self, other: CoeffLike) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other: Union["MultiPoly", CoeffLike]) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            factor = Coefficient.coerce(other)
            return MultiPoly._raw(self._variables, {e: c * factor for e, c in self._terms.items()})
        self._align(other)
        result: dict[Exponent, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                result[e] = result[e] + product if e in result else product
        return MultiPoly._raw(self._variables, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Отрицательная степень многочлена")
        result = MultiPoly.constant(self._variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # === Подстановки ===

    def shift(self, name: str, amount: int) -> "MultiPoly":
        """Подстановка name -> name + amount через бином Ньютона."""
        i = self._index(name)
        if amount == 0:
            return self
        result: dict[Exponent, Coefficient] = {}
        for e, c in self._terms.items():
            d = e[i]
            for j in range(d + 1):
                weight = comb(d, j) * amount ** (d - j)
                new_e = e[:i] + (j,) + e[i + 1:]
                term = c * weight
                result[new_e] = result[new_e] + term if new_e in result else term
        return MultiPoly._raw(self._variables, result)

    def substitute(self, point: Mapping[str, Union[int, Fraction]]) -> "MultiPoly":
        """
        Частичная подстановка: указанные переменные удаляются из списка.

        Используется для позднего подставления b.
        """
        indices = [self._index(name) for name in point]
        keep = [i for i in range(len(self._variables)) if i not in indices]
        variables = tuple(self._variables[i] for i in keep)
        values = [Fraction(point[self._variables[i]]) for i in indices]
        result: dict[Exponent, Coefficient] = {}
        for e, c in self._terms.items():
            scale = Fraction(1)
            for i, value in zip(indices, values):
                scale *= value ** e[i]
            if not scale:
                continue
            new_e = tuple(e[i] for i in keep)
            term = c * scale
            result[new_e] = result[new_e] + term if new_e in result else term
        return MultiPoly._raw(variables, result)

    def evaluate(self, point: Mapping[str, Union[int, Fraction]]) -> Coefficient:
        missing = [v for v in self._variables if v not in point]
        if missing:
            raise UnknownVariableError(f"В точке нет значений для {missing}")
        return self.substitute({v: point[v] for v in self._variables}).constant_term()

    def constant_term(self) -> Coefficient:
        return self._terms.get((0,) * len(self._variables), Coefficient.zero())

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Переименование переменных (порядок сохраняется)."""
        variables = tuple(mapping.get(v, v) for v in self._variables)
        return MultiPoly(variables, self._terms)

    def with_variables(self, variables: Sequence[str]) -> "MultiPoly":
        """Переносит многочлен в другой (больший) список переменных."""
        variables = tuple(variables)
        for name, e in zip(self._variables, zip(*self._terms) if self._terms else []):
            if name not in variables and any(e):
                raise UnknownVariableError(f"Переменная {name} отсутствует в {variables}")
        positions = {v: i for i, v in enumerate(self._variables)}
        result = {}
        for e, c in self._terms.items():
            new_e = tuple(e[positions[v]] if v in positions else 0 for v in variables)
            result[new_e] = c
        return MultiPoly._raw(variables, result)

    def map_coefficients(self, fn) -> "MultiPoly":
        return MultiPoly._raw(self._variables, {e: fn(c) for e, c in self._terms.items()})

    # === Сравнение и вывод ===

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Coefficient)):
            other = MultiPoly.constant(self._variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._variables == other._variables and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._variables, tuple(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiPoly({self._variables}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(list(self._terms.items())):
            monomial = "*".join(
                name if d == 1 else f"{name}^{d}"
                for name, d in zip(self._variables, e) if d
            )
            coefficient = str(c)
            if not monomial:
                parts.append(coefficient)
            elif coefficient == "1":
                parts.append(monomial)
            else:
                parts.append(f"({coefficient})*{monomial}")
        return " + ".join(parts)


def poly_shift(p: MultiPoly, var: str, amount: int) -> MultiPoly:
    """
    Сдвиг переменной: var -> var + amount.

    Raises:
        UnknownVariableError: переменной нет в p
    """
    return p.shift(var, amount)


def poly_eval(p: MultiPoly, point: Mapping[str, Union[int, Fraction]]) -> Coefficient:
    """
    Точное значение многочлена в точке.

    Raises:
        UnknownVariableError: точка не покрывает все переменные
    """
    return p.evaluate(point)


def binomial_poly(base: MultiPoly, m: int) -> MultiPoly:
    """binom(base, m) = base(base-1)…(base-m+1)/m! как многочлен."""
    if m < 0:
        raise ValueError(f"Нижний индекс биномиального коэффициента < 0: {m}")
    result = MultiPoly.constant(base.variables, 1)
    for i in range(m):
        result = result * (base - i)
    return result * Fraction(1, factorial(m))


def poly_det(matrix: Sequence[Sequence[MultiPoly]], variables: Optional[Iterable[str]] = None) -> MultiPoly:
    """
    Определитель квадратной матрицы многочленов.

    Разложение по первой строке с запоминанием миноров по множеству
    оставшихся столбцов (2^n миноров вместо n!).
    """
    size = len(matrix)
    if size == 0:
        if variables is None:
            raise ValueError("Для пустой матрицы нужен список переменных")
        return MultiPoly.constant(tuple(variables), 1)
    if any(len(row) != size for row in matrix):
        raise ValueError("Матрица не квадратная")

    minors: dict[tuple[int, ...], MultiPoly] = {}

    def minor(row: int, columns: tuple[int, ...]) -> MultiPoly:
        if row == size:
            return MultiPoly.constant(matrix[0][0].variables, 1)
        if columns in minors:
            return minors[columns]
        total = MultiPoly.constant(matrix[0][0].variables, 0)
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if entry.is_zero():
                continue
            rest = columns[:position] + columns[position + 1:]
            term = entry * minor(row + 1, rest)
            total = total - term if position % 2 else total + term
        minors[columns] = total
        return total

    return minor(0, tuple(range(size)))

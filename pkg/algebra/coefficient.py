"""
Кольцо коэффициентов производящих функций.

Элемент кольца — многочлен Лорана по Q и многочлен по P с рациональными
коэффициентами. Все знаменатели, которые возникают в формулах, являются
степенями Q, поэтому поле рациональных функций не нужно.

Классы:
- Coefficient: неизменяемый элемент кольца

Функции:
- coeff_arith(): сложение, вычитание, умножение
- coeff_div_q_power(): деление на Q^e
- rational_binomial(): биномиальный коэффициент с рациональным верхним аргументом
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import factorial
from types import MappingProxyType
from typing import Mapping, Optional, Union

logger = logging.getLogger(__name__)

# Рациональные числа: стандартные дроби произвольной точности
Rational = Fraction

Scalar = Union[int, Fraction]
CoeffLike = Union["Coefficient", int, Fraction]


class NonUnitError(ArithmeticError):
    """Элемент не обратим в кольце коэффициентов (не моном Q^a·r)"""
    pass


class Coefficient:
    """
    Элемент Q[Q, Q⁻¹, P].

    Хранится словарём (q_exp, p_exp) -> Fraction без нулевых членов,
    в каноническом (отсортированном) порядке.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple[int, int], Scalar]] = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (q_exp, p_exp), value in (terms or {}).items():
            if p_exp < 0:
                raise ValueError(f"Отрицательная степень P: {p_exp}")
            value = Fraction(value)
            if value:
                key = (int(q_exp), int(p_exp))
                clean[key] = clean.get(key, Fraction(0)) + value
        self._terms = {k: v for k, v in sorted(clean.items()) if v}
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Fraction]) -> "Coefficient":
        """Конструктор без проверок: ключи корректны, нулей нет."""
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    # === Конструкторы ===

    @classmethod
    def zero(cls) -> "Coefficient":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Coefficient":
        return cls._raw({(0, 0): Fraction(1)})

    @classmethod
    def const(cls, value: Scalar) -> "Coefficient":
        value = Fraction(value)
        return cls._raw({(0, 0): value} if value else {})

    @classmethod
    def Q(cls, power: int = 1) -> "Coefficient":
        return cls._raw({(power, 0): Fraction(1)})

    @classmethod
    def P(cls, power: int = 1) -> "Coefficient":
        if power < 0:
            raise ValueError(f"Отрицательная степень P: {power}")
        return cls._raw({(0, power): Fraction(1)})

    @classmethod
    def coerce(cls, value: CoeffLike) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.const(value)
        raise TypeError(f"Нельзя привести к Coefficient: {value!r}")

    # === Доступ ===

    @property
    def terms(self) -> Mapping[tuple[int, int], Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        """Значение константы; для неконстант — ValueError."""
        if not self.is_constant():
            raise ValueError(f"Коэффициент не является константой: {self}")
        return self._terms.get((0, 0), Fraction(0))

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms))[1] == 0

    def min_q_exp(self) -> int:
        return min((q for q, _ in self._terms), default=0)

    def is_polynomial(self) -> bool:
        """Нет отрицательных степеней Q."""
        return self.min_q_exp() >= 0

    def has_nonnegative_integer_coefficients(self) -> bool:
        return all(v.denominator == 1 and v >= 0 for v in self._terms.values())

    # === Арифметика ===

    def __neg__(self) -> "Coefficient":
        return Coefficient._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other: CoeffLike) -> "Coefficient":
        if not isinstance(other, (Coefficient, int, Fraction)):
            return NotImplemented
        other = Coefficient.coerce(other)
        result = dict(self._terms)
        for key, value in other._terms.items():
            total = result.get(key, 0) + value
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return Coefficient._raw(result)

    __radd__ = __add__

    def __sub__(self, other: CoeffLike) -> "Coefficient":
        if not isinstance(other, (Coefficient, int, Fraction)):
            return NotImplemented
        return self + (-Coefficient.coerce(other))

    def __rsub__(self, other: CoeffLike) -> "Coefficient":
        return Coefficient.coerce(other) + (-self)

    def __mul__(self, other: CoeffLike) -> "Coefficient":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Coefficient.zero()
            return Coefficient._raw({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, Coefficient):
            return NotImplemented
        result: dict[tuple[int, int], Fraction] = {}
        for (q1, p1), v1 in self._terms.items():
            for (q2, p2), v2 in other._terms.items():
                key = (q1 + q2, p1 + p2)
                result[key] = result.get(key, 0) + v1 * v2
        return Coefficient._raw({k: v for k, v in result.items() if v})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Coefficient":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Coefficient.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other: CoeffLike) -> "Coefficient":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Coefficient):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "Coefficient":
        """Обратный элемент; существует только для мономов Q^a·r."""
        if not self.is_unit():
            raise NonUnitError(f"Необратимый коэффициент: {self}")
        (q_exp, _), value = next(iter(self._terms.items()))
        return Coefficient._raw({(-q_exp, 0): 1 / value})

    def div_q_power(self, e: int) -> "Coefficient":
        return Coefficient._raw({(q - e, p): v for (q, p), v in self._terms.items()})

    # === Подстановки ===

    def substitute(self, Q: Optional[Scalar] = None, P: Optional[Scalar] = None) -> "Coefficient":
        """Подстановка рациональных значений вместо Q и/или P."""
        if Q is not None and Fraction(Q) == 0 and self.min_q_exp() < 0:
            raise ZeroDivisionError("Подстановка Q=0 в отрицательную степень Q")
        result: dict[tuple[int, int], Fraction] = {}
        for (q_exp, p_exp), value in self._terms.items():
            if Q is not None:
                value = value * Fraction(Q) ** q_exp
                q_exp = 0
            if P is not None:
                value = value * Fraction(P) ** p_exp
                p_exp = 0
            key = (q_exp, p_exp)
            result[key] = result.get(key, 0) + value
        return Coefficient._raw({k: v for k, v in result.items() if v})

    def evaluate(self, Q: Scalar, P: Scalar = 1) -> Fraction:
        return self.substitute(Q=Q, P=P).constant_value()

    # === Сравнение и вывод ===

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Coefficient.const(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Coefficient({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (q_exp, p_exp), value in self._terms.items():
            symbols = []
            if p_exp:
                symbols.append("P" if p_exp == 1 else f"P^{p_exp}")
            if q_exp:
                symbols.append("Q" if q_exp == 1 else f"Q^{q_exp}")
            if not symbols:
                parts.append(str(value))
            elif value == 1:
                parts.append("*".join(symbols))
            elif value == -1:
                parts.append("-" + "*".join(symbols))
            else:
                parts.append(f"{value}*" + "*".join(symbols))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        """JSON-форма: {"terms": [{"q", "p", "num", "den"}]} в порядке (q, p)."""
        return {
            "terms": [
                {"q": q, "p": p, "num": str(v.numerator), "den": str(v.denominator)}
                for (q, p), v in self._terms.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Coefficient":
        return cls({
            (int(t["q"]), int(t["p"])): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        })


def coeff_arith(a: CoeffLike, b: CoeffLike, op: str) -> Coefficient:
    """
    Точная арифметика в кольце коэффициентов.

    Args:
        a, b: операнды
        op: "add", "sub" или "mul"

    Returns:
        Coefficient в канонической форме
    """
    a = Coefficient.coerce(a)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Неизвестная операция: {op}")


def coeff_div_q_power(a: CoeffLike, e: int) -> Coefficient:
    """Уменьшает каждую степень Q на e."""
    return Coefficient.coerce(a).div_q_power(e)


def rational_binomial(x: Scalar, m: int) -> Fraction:
    """
    x(x-1)…(x-m+1)/m! для рационального x.

    Полуцелые аргументы считаются произведением, а не через факториалы.
    """
    if m < 0:
        raise ValueError(f"Нижний индекс биномиального коэффициента < 0: {m}")
    x = Fraction(x)
    numerator = Fraction(1)
    for i in range(m):
        numerator *= x - i
    return numerator / factorial(m)

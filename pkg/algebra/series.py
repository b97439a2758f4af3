"""
Усечённые степенные ряды от нескольких переменных x_1…x_m.

Степени выше порога (cap) по любой переменной отбрасываются при каждой
операции. Отбрасывание детерминировано и не влияет на коэффициенты
с меньшими степенями.

Функции:
- series_mul(): усечённое произведение
- constant_term_extract(): коэффициент при x^(-offset)
"""

from __future__ import annotations

import logging
from itertools import permutations as _permutations
from types import MappingProxyType
from typing import Mapping, Optional, Sequence

from algebra.coefficient import CoeffLike, Coefficient
from algebra.multipoly import MultiPoly

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


class TruncationError(ArithmeticError):
    """Нужная степень превышает порог усечения ряда"""
    pass


class CapMismatchError(ValueError):
    """Ряды с разными переменными или порогами"""
    pass


class TruncSeries:
    """Ряд sum c_e x^e, 0 <= e_i <= caps[i]."""

    __slots__ = ("_variables", "_caps", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        caps: Sequence[int],
        terms: Optional[Mapping[Exponent, CoeffLike]] = None,
    ):
        variables, caps = tuple(variables), tuple(int(c) for c in caps)
        if len(variables) != len(caps):
            raise CapMismatchError(f"Число порогов {caps} не совпадает с переменными {variables}")
        if any(c < 0 for c in caps):
            raise ValueError(f"Отрицательный порог: {caps}")
        clean: dict[Exponent, Coefficient] = {}
        for exponent, value in (terms or {}).items():
            exponent = tuple(exponent)
            if len(exponent) != len(variables):
                raise CapMismatchError(f"Степень {exponent} не совпадает по длине с переменными {variables}")
            if any(e < 0 for e in exponent):
                raise ValueError(f"Отрицательная степень в ряде: {exponent}")
            if any(e > c for e, c in zip(exponent, caps)):
                continue
            total = clean.get(exponent, Coefficient.zero()) + Coefficient.coerce(value)
            clean[exponent] = total
        self._variables = variables
        self._caps = caps
        self._terms = {e: c for e, c in sorted(clean.items()) if not c.is_zero()}

    @classmethod
    def _raw(cls, variables, caps, terms: dict[Exponent, Coefficient]) -> "TruncSeries":
        obj = cls.__new__(cls)
        obj._variables = variables
        obj._caps = caps
        obj._terms = {e: c for e, c in sorted(terms.items()) if not c.is_zero()}
        return obj

    @classmethod
    def one(cls, variables: Sequence[str], caps: Sequence[int]) -> "TruncSeries":
        variables, caps = tuple(variables), tuple(caps)
        return cls._raw(variables, caps, {(0,) * len(variables): Coefficient.one()})

    @classmethod
    def from_poly(cls, poly: MultiPoly, variables: Sequence[str], caps: Sequence[int]) -> "TruncSeries":
        """Многочлен от x-переменных как ряд (старшие степени отбрасываются)."""
        aligned = poly.with_variables(variables)
        return cls(variables, caps, dict(aligned.terms))

    # === Доступ ===

    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def caps(self) -> tuple[int, ...]:
        return self._caps

    @property
    def terms(self) -> Mapping[Exponent, Coefficient]:
        return MappingProxyType(self._terms)

    def coefficient(self, exponent: Exponent) -> Coefficient:
        return self._terms.get(tuple(exponent), Coefficient.zero())

    def constant(self) -> Coefficient:
        return self.coefficient((0,) * len(self._variables))

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "TruncSeries") -> None:
        if self._variables != other._variables or self._caps != other._caps:
            raise CapMismatchError(
                f"Несовместимые ряды: {self._variables}/{self._caps} и {other._variables}/{other._caps}"
            )

    # === Арифметика ===

    def __neg__(self) -> "TruncSeries":
        return TruncSeries._raw(self._variables, self._caps, {e: -c for e, c in self._terms.items()})

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        result = dict(self._terms)
        for e, c in other._terms.items():
            result[e] = result[e] + c if e in result else c
        return TruncSeries._raw(self._variables, self._caps, result)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def scale(self, factor: CoeffLike) -> "TruncSeries":
        factor = Coefficient.coerce(factor)
        return TruncSeries._raw(self._variables, self._caps, {e: c * factor for e, c in self._terms.items()})

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        caps = self._caps
        result: dict[Exponent, Coefficient] = {}
        right = list(other._terms.items())
        for e1, c1 in self._terms.items():
            room = tuple(c - e for c, e in zip(caps, e1))
            for e2, c2 in right:
                if any(b > r for b, r in zip(e2, room)):
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                product = c1 * c2
                result[e] = result[e] + product if e in result else product
        return TruncSeries._raw(self._variables, caps, result)

    def __pow__(self, exponent: int) -> "TruncSeries":
        if exponent < 0:
            raise ValueError("Для отрицательной степени используйте inverse()")
        result = TruncSeries.one(self._variables, self._caps)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self) -> "TruncSeries":
        """
        Обратный ряд через геометрическую прогрессию.

        f = c0 (1 - w), где c0 обратим; 1/f = c0^{-1} sum w^i.
        Ряд w без свободного члена, поэтому сумма конечна.

        Raises:
            NonUnitError: свободный член необратим
        """
        u = self.constant().inverse()
        w = TruncSeries.one(self._variables, self._caps) - self.scale(u)
        result = TruncSeries.one(self._variables, self._caps)
        power = TruncSeries.one(self._variables, self._caps)
        while True:
            power = power * w
            if power.is_zero():
                break
            result = result + power
        return result.scale(u)

    def permute(self, perm: Sequence[int]) -> "TruncSeries":
        """
        Перестановка переменных: результат g(x) = f(x_{perm[0]}, …, x_{perm[m-1]}).

        Пороги переставляемых переменных должны совпадать.
        """
        perm = tuple(perm)
        if sorted(perm) != list(range(len(self._variables))):
            raise ValueError(f"Некорректная перестановка: {perm}")
        if any(self._caps[i] != self._caps[perm[i]] for i in range(len(perm))):
            raise CapMismatchError("Перестановка переменных с разными порогами")
        result = {}
        for e, c in self._terms.items():
            new_e = [0] * len(e)
            for i, d in enumerate(e):
                new_e[perm[i]] = d
            result[tuple(new_e)] = c
        return TruncSeries._raw(self._variables, self._caps, result)

    def symmetrized(self) -> "TruncSeries":
        """Сумма по всем перестановкам переменных."""
        total = TruncSeries(self._variables, self._caps)
        for perm in _permutations(range(len(self._variables))):
            total = total + self.permute(perm)
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self._variables, self._caps, self._terms) == (other._variables, other._caps, other._terms)

    def __repr__(self) -> str:
        return f"TruncSeries({self._variables}, caps={self._caps}, terms={len(self._terms)})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """
    Усечённая свёртка.

    Raises:
        CapMismatchError: разные переменные или пороги
    """
    return a * b


def constant_term_extract(s: TruncSeries, offset: Sequence[int]) -> Coefficient:
    """
    Свободный член x^offset · s, то есть коэффициент s при x^(-offset).

    Args:
        s: усечённый ряд
        offset: вектор степеней лорановского монома

    Raises:
        TruncationError: нужная степень выше порога ряда
    """
    offset = tuple(offset)
    if len(offset) != len(s.variables):
        raise CapMismatchError(f"Длина смещения {offset} не совпадает с переменными {s.variables}")
    needed = tuple(-o for o in offset)
    if any(n < 0 for n in needed):
        return Coefficient.zero()
    for name, n, cap in zip(s.variables, needed, s.caps):
        if n > cap:
            raise TruncationError(
                f"Нужна степень {n} по {name}, а порог ряда {cap}"
            )
    return s.coefficient(needed)

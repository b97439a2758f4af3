"""
Разбор операторных выражений и многочленов.

Грамматика операторов:
    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | postfix
    postfix := atom ('^' ['-'] INT)*
    atom    := 'Id' | NAME '_' ('{' VAR '}' | VAR) | 'Q' | 'P' | INT | '(' expr ')'

Атомы: Id, E, Fd, Bd, Qfd, QId, QE. Отрицательная степень допустима только у E.

Функции:
- tokenize(): лексемы с позициями
- parse_operator_expr(): текст -> OperatorExpr
- parse_polynomial(): текст -> MultiPoly
- natural_sorted(): порядок переменных k1, k2, …, k10
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from algebra import Coefficient, MultiPoly
from operators.expr import (
    Bd,
    Compose,
    Fd,
    Id,
    OperatorExpr,
    Power,
    QE,
    QId,
    Qfd,
    ScalarMul,
    Shift,
    Sum,
)

logger = logging.getLogger(__name__)

OPERATOR_ATOMS = {"E": Shift, "Fd": Fd, "Bd": Bd, "Qfd": Qfd, "QId": QId, "QE": QE}
COEFFICIENT_SYMBOLS = {"Q", "P"}


class ParseError(ValueError):
    """Синтаксическая ошибка с позицией в тексте"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (позиция {position})")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str   # "int", "name", "op", "end"
    value: object
    position: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|(.))")


def tokenize(source: str) -> list[Token]:
    """Разбивает текст на лексемы; пробелы игнорируются."""
    tokens = []
    position = 0
    while position < len(source):
        match = _TOKEN_RE.match(source, position)
        if match is None or match.end() == position:
            break
        number, name, symbol = match.groups()
        start = match.start(match.lastindex) if match.lastindex else position
        if number is not None:
            tokens.append(Token("int", int(number), start))
        elif name is not None:
            tokens.append(Token("name", name, start))
        elif symbol is not None:
            if symbol not in "+-*^()_{}/":
                raise ParseError(f"Неожиданный символ {symbol!r}", start)
            tokens.append(Token("op", symbol, start))
        position = match.end()
    tokens.append(Token("end", None, len(source)))
    return tokens


class _Stream:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def next(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def accept(self, symbol: str) -> bool:
        token = self.peek()
        if token.kind == "op" and token.value == symbol:
            self.index += 1
            return True
        return False

    def expect(self, symbol: str) -> Token:
        token = self.next()
        if token.kind != "op" or token.value != symbol:
            raise ParseError(f"Ожидалось {symbol!r}", token.position)
        return token


# === Операторные выражения ===

def parse_operator_expr(text: str) -> OperatorExpr:
    """
    Разбирает операторное выражение.

    Raises:
        ParseError: синтаксическая ошибка или отрицательная степень не у E
    """
    stream = _Stream(tokenize(text))
    result = _op_expr(stream)
    token = stream.peek()
    if token.kind != "end":
        raise ParseError(f"Лишний текст {token.value!r}", token.position)
    return result


def _op_expr(stream: _Stream) -> OperatorExpr:
    items = [_op_term(stream)]
    while True:
        if stream.accept("+"):
            items.append(_op_term(stream))
        elif stream.accept("-"):
            items.append(_negate(_op_term(stream)))
        else:
            break
    return items[0] if len(items) == 1 else _make_sum(items)


def _op_term(stream: _Stream) -> OperatorExpr:
    items = [_op_unary(stream)]
    while stream.accept("*"):
        items.append(_op_unary(stream))
    return items[0] if len(items) == 1 else _make_compose(items)


def _op_unary(stream: _Stream) -> OperatorExpr:
    if stream.accept("-"):
        return _negate(_op_unary(stream))
    return _op_postfix(stream)


def _op_postfix(stream: _Stream) -> OperatorExpr:
    base = _op_atom(stream)
    while True:
        token = stream.peek()
        if not stream.accept("^"):
            return base
        negative = stream.accept("-")
        number = stream.next()
        if number.kind != "int":
            raise ParseError("Ожидался целый показатель степени", number.position)
        exponent = -number.value if negative else number.value
        if isinstance(base, Shift):
            base = Shift(base.var, base.power * exponent)
        elif isinstance(base, ScalarMul):
            if negative and not base.coefficient.is_unit():
                raise ParseError("Отрицательная степень необратимого коэффициента", token.position)
            base = ScalarMul(base.coefficient ** exponent)
        elif negative:
            raise ParseError("Отрицательная степень допустима только у E", token.position)
        else:
            base = Power(base, exponent)


def _op_atom(stream: _Stream) -> OperatorExpr:
    token = stream.next()
    if token.kind == "int":
        return ScalarMul(Coefficient.const(token.value))
    if token.kind == "op" and token.value == "(":
        inner = _op_expr(stream)
        stream.expect(")")
        return inner
    if token.kind == "name":
        if token.value == "Id":
            return Id()
        if token.value == "Q":
            return ScalarMul(Coefficient.Q())
        if token.value == "P":
            return ScalarMul(Coefficient.P())
        if token.value in OPERATOR_ATOMS:
            stream.expect("_")
            var = _variable_name(stream)
            return OPERATOR_ATOMS[token.value](var)
        raise ParseError(f"Неизвестный атом {token.value!r}", token.position)
    raise ParseError("Ожидался атом", token.position)


def _variable_name(stream: _Stream) -> str:
    braced = stream.accept("{")
    token = stream.next()
    if token.kind != "name":
        raise ParseError("Ожидалось имя переменной", token.position)
    if braced:
        stream.expect("}")
    return token.value


def _negate(expr: OperatorExpr) -> OperatorExpr:
    if isinstance(expr, ScalarMul):
        return ScalarMul(-expr.coefficient)
    return Compose((ScalarMul(Coefficient.const(-1)), expr))


def _make_sum(items: list[OperatorExpr]) -> OperatorExpr:
    if all(isinstance(i, ScalarMul) for i in items):
        total = Coefficient.zero()
        for i in items:
            total = total + i.coefficient
        return ScalarMul(total)
    return Sum(tuple(items))


def _make_compose(items: list[OperatorExpr]) -> OperatorExpr:
    if all(isinstance(i, ScalarMul) for i in items):
        product = Coefficient.one()
        for i in items:
            product = product * i.coefficient
        return ScalarMul(product)
    return Compose(tuple(items))


# === Многочлены ===

def parse_polynomial(text: str, variables: Optional[Sequence[str]] = None) -> MultiPoly:
    """
    Разбирает многочлен от целочисленных переменных с коэффициентами из Q, P.

    Допустимы +, -, *, ^ (целая степень), деление на целое и скобки.
    Без списка variables переменные упорядочиваются по имени.

    Raises:
        ParseError: синтаксическая ошибка
    """
    tokens = tokenize(text)
    names = [t.value for t in tokens if t.kind == "name" and t.value not in COEFFICIENT_SYMBOLS]
    if variables is None:
        variables = natural_sorted(names)
    else:
        variables = tuple(variables)
        unknown = [t for t in tokens if t.kind == "name" and t.value not in COEFFICIENT_SYMBOLS and t.value not in variables]
        if unknown:
            raise ParseError(f"Неизвестная переменная {unknown[0].value!r}", unknown[0].position)
    stream = _Stream(tokens)
    result = _poly_expr(stream, tuple(variables))
    token = stream.peek()
    if token.kind != "end":
        raise ParseError(f"Лишний текст {token.value!r}", token.position)
    return result


def natural_sorted(names) -> list[str]:
    """Имена без повторов, числовые суффиксы по значению: k2 < k10."""
    return sorted(set(names), key=_natural_key)


def _natural_key(name: str) -> tuple:
    match = re.fullmatch(r"([A-Za-z]+)(\d*)", name)
    if match is None:
        return (name, 0)
    prefix, digits = match.groups()
    return (prefix, int(digits) if digits else -1)


def _poly_expr(stream: _Stream, variables: tuple) -> MultiPoly:
    result = _poly_term(stream, variables)
    while True:
        if stream.accept("+"):
            result = result + _poly_term(stream, variables)
        elif stream.accept("-"):
            result = result - _poly_term(stream, variables)
        else:
            return result


def _poly_term(stream: _Stream, variables: tuple) -> MultiPoly:
    result = _poly_unary(stream, variables)
    while True:
        if stream.accept("*"):
            result = result * _poly_unary(stream, variables)
        elif stream.accept("/"):
            token = stream.next()
            if token.kind != "int" or token.value == 0:
                raise ParseError("Делить можно только на ненулевое целое", token.position)
            result = result * Fraction(1, token.value)
        else:
            return result


def _poly_unary(stream: _Stream, variables: tuple) -> MultiPoly:
    if stream.accept("-"):
        return -_poly_unary(stream, variables)
    return _poly_power(stream, variables)


def _poly_power(stream: _Stream, variables: tuple) -> MultiPoly:
    base = _poly_atom(stream, variables)
    while stream.accept("^"):
        negative = stream.accept("-")
        token = stream.next()
        if token.kind != "int":
            raise ParseError("Ожидался целый показатель степени", token.position)
        if negative:
            constant = base.constant_term()
            if base != MultiPoly.constant(variables, constant) or not constant.is_unit():
                raise ParseError("Отрицательная степень допустима только у Q и констант", token.position)
            base = MultiPoly.constant(variables, constant ** (-token.value))
        else:
            base = base ** token.value
    return base


def _poly_atom(stream: _Stream, variables: tuple) -> MultiPoly:
    token = stream.next()
    if token.kind == "int":
        return MultiPoly.constant(variables, token.value)
    if token.kind == "name":
        if token.value == "Q":
            return MultiPoly.constant(variables, Coefficient.Q())
        if token.value == "P":
            return MultiPoly.constant(variables, Coefficient.P())
        return MultiPoly.variable(variables, token.value)
    if token.kind == "op" and token.value == "(":
        inner = _poly_expr(stream, variables)
        stream.expect(")")
        return inner
    raise ParseError("Ожидался атом многочлена", token.position)

"""
Типы аргументов командной строки.

Функции:
- int_vector(): "1,2,3" / "-3 -1" -> [1, 2, 3]
- point_assignment(): "k1=1,k2=3" -> {"k1": 1, "k2": 3}
- add_instance_flags(): общие флаги экземпляра (--n, --l, --b, --bottom, --s, --c)
"""

import argparse
import re

from data import clean_vector


def int_vector(text: str) -> list[int]:
    try:
        vector = clean_vector(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))
    return vector or []


def point_assignment(text: str) -> dict[str, int]:
    result = {}
    for part in filter(None, re.split(r"[,;\s]+", text.strip())):
        match = re.fullmatch(r"([A-Za-z][A-Za-z0-9]*)=([+-]?\d+)", part)
        if match is None:
            raise argparse.ArgumentTypeError(f"Ожидалось имя=целое: {part!r}")
        result[match.group(1)] = int(match.group(2))
    return result


def add_instance_flags(parser: argparse.ArgumentParser, c: bool = False) -> None:
    parser.add_argument("--n", type=int, required=True, help="Порядок")
    parser.add_argument("--l", type=int, default=None, help="Длина основания трапеции")
    parser.add_argument("--b", type=int, default=None, help="Верхняя граница элементов")
    parser.add_argument("--bottom", type=int_vector, default=[], help="Нижняя строка k_1,…,k_m")
    parser.add_argument("--s", type=int_vector, default=[], help="Вектор усечения s_1,…")
    if c:
        parser.add_argument("--c", type=int_vector, default=None, help="Вектор 1-столбцов c_1,…")

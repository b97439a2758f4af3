"""
Очистка таблиц экземпляров.

Векторы в ячейках пишут по-разному:
- "1,2,3", "1 2 3", "1;2;3", "(1, 2, 3)", "[1,2,3]"
- "—", "нет", "" вместо пустого значения
- одно число (Excel читает его как 3.0)
"""

import logging
import re
from typing import Optional

import pandas as pd

from data.models import InstanceBatch, InstanceRow

logger = logging.getLogger(__name__)


# === Синонимы колонок ===
# Ключ — стандартное имя, значения — возможные названия в файлах
COLUMN_SYNONYMS = {
    'kind': ['kind', 'вид', 'тип', 'type'],
    'n': ['n', 'порядок', 'order'],
    'l': ['l', 'основание', 'base'],
    'b': ['b', 'граница', 'bound'],
    'k': ['k', 'нижняя строка', 'bottom'],
    's': ['s', 'усечение', 'truncation'],
    'c': ['c', 'столбцы', 'columns'],
}

# Паттерны для "пустых" значений
EMPTY_PATTERNS = ['-', '—', '–', 'нет', 'н/д', 'n/a', 'na', 'nan', 'none', '']


def _is_empty(value) -> bool:
    if value is None:
        return True
    if isinstance(value, float) and pd.isna(value):
        return True
    return str(value).strip().lower() in EMPTY_PATTERNS


def clean_int(value) -> Optional[int]:
    """
    Целое из ячейки.

    Примеры:
    - 3 -> 3
    - 3.0 -> 3
    - " -2 " -> -2
    - "—" -> None

    Raises:
        ValueError: дробное или нечисловое значение
    """
    if _is_empty(value):
        return None
    if isinstance(value, (int, float)):
        if float(value) != int(value):
            raise ValueError(f"Ожидалось целое: {value}")
        return int(value)
    s = str(value).strip()
    if not re.fullmatch(r'[+-]?\d+(\.0+)?', s):
        raise ValueError(f"Ожидалось целое: {value!r}")
    return int(float(s))


def clean_vector(value) -> Optional[list[int]]:
    """
    Вектор целых из ячейки или аргумента командной строки.

    Примеры:
    - "1,2,3" -> [1, 2, 3]
    - "(-3; -1)" -> [-3, -1]
    - 2.0 -> [2]
    - "—" -> None

    Raises:
        ValueError: элемент не целый
    """
    if _is_empty(value):
        return None
    if isinstance(value, (int, float)):
        return [clean_int(value)]
    s = str(value).strip().strip('()[]{}')
    if not s:
        return []
    parts = [p for p in re.split(r'[,;\s]+', s) if p]
    return [clean_int(p) for p in parts]


def normalize_column_name(name: str) -> Optional[str]:
    """
    Сопоставляет название колонки со схемой.

    Точное совпадение имеет приоритет: однобуквенные имена
    иначе совпали бы с любым названием.
    """
    name_lower = str(name).lower().strip()
    for standard_name, synonyms in COLUMN_SYNONYMS.items():
        if name_lower in synonyms:
            return standard_name
    for standard_name, synonyms in COLUMN_SYNONYMS.items():
        for synonym in synonyms:
            if len(synonym) > 1 and synonym in name_lower:
                return standard_name
    return None


def clean_dataframe(df: pd.DataFrame) -> InstanceBatch:
    """
    Переименовывает колонки, чистит ячейки и собирает экземпляры.

    Строки без kind или n пропускаются с предупреждением.

    Raises:
        ValueError: нет колонок kind и n
    """
    warnings: list[str] = []
    mapping = {}
    for column in df.columns:
        standard = normalize_column_name(column)
        if standard is None:
            warnings.append(f"Колонка {column!r} не распознана и пропущена")
        elif standard in mapping.values():
            warnings.append(f"Колонка {column!r} повторяет {standard!r} и пропущена")
        else:
            mapping[column] = standard
    df = df[list(mapping)].rename(columns=mapping)
    if 'kind' not in df.columns or 'n' not in df.columns:
        raise ValueError(f"Нужны колонки kind и n, найдены: {list(df.columns)}")

    rows = []
    for index, record in df.iterrows():
        line = index + 2  # заголовок в строке 1
        if _is_empty(record['kind']) or _is_empty(record['n']):
            warnings.append(f"Строка {line}: нет kind или n, пропущена")
            continue
        try:
            rows.append(InstanceRow(
                kind=str(record['kind']).strip().lower(),
                n=clean_int(record['n']),
                l=clean_int(record.get('l')),
                b=clean_int(record.get('b')),
                k=clean_vector(record.get('k')) or [],
                s=clean_vector(record.get('s')) or [],
                c=clean_vector(record.get('c')),
            ))
        except ValueError as e:
            warnings.append(f"Строка {line}: {e}")
    for warning in warnings:
        logger.warning(warning)
    logger.info(f"Экземпляров: {len(rows)}, предупреждений: {len(warnings)}")
    return InstanceBatch(rows=rows, parsing_warnings=warnings)

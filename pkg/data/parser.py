"""
Парсер пакетных файлов CSV и Excel.

Функции:
- parse_file(): определяет формат и читает файл в DataFrame
- load_instances(): чтение и очистка в InstanceBatch
"""

import logging
from pathlib import Path
from typing import Union

import pandas as pd

from data.cleaner import clean_dataframe
from data.models import InstanceBatch

logger = logging.getLogger(__name__)


class FileFormatError(Exception):
    """Ошибка при чтении пакетного файла"""
    pass


def parse_file(file_path: Union[str, Path]) -> pd.DataFrame:
    """
    Читает файл CSV или Excel и возвращает DataFrame.

    Все ячейки читаются как строки: векторы вида "1,2" не должны
    превращаться в числа.

    Args:
        file_path: путь к файлу (CSV, XLSX)

    Returns:
        pd.DataFrame с сырыми данными

    Raises:
        FileFormatError: если формат не поддерживается или файл не читается
    """
    path = Path(file_path)

    if not path.exists():
        raise FileFormatError(f"Файл не найден: {path}")

    suffix = path.suffix.lower()

    logger.info(f"Парсинг файла: {path.name} (формат: {suffix})")

    try:
        if suffix == ".csv":
            return _parse_csv(path)
        elif suffix == ".xlsx":
            return _parse_excel(path)
        else:
            raise FileFormatError(
                f"Неподдерживаемый формат файла: {suffix}. "
                f"Поддерживаются: CSV, XLSX"
            )
    except FileFormatError:
        raise
    except Exception as e:
        logger.error(f"Ошибка при чтении файла: {e}")
        raise FileFormatError(f"Не удалось прочитать файл: {e}")


def _parse_csv(path: Path) -> pd.DataFrame:
    """
    Парсит CSV файл.

    Пробует разделители: точка с запятой, табуляция, запятая
    (векторы внутри ячеек обычно записаны через запятую).
    """
    for sep in [";", "\t", ","]:
        try:
            df = pd.read_csv(path, encoding="utf-8", sep=sep, dtype=str, keep_default_na=False)
        except Exception as e:
            logger.debug(f"Ошибка: sep={repr(sep)}: {e}")
            continue
        if len(df.columns) > 1:
            logger.debug(f"CSV прочитан: sep={repr(sep)}, колонок: {len(df.columns)}")
            return df

    raise FileFormatError("Не удалось определить разделитель CSV (точка с запятой, табуляция или запятая).")


def _parse_excel(path: Path) -> pd.DataFrame:
    """Первый лист Excel."""
    try:
        df = pd.read_excel(path, sheet_name=0, engine="openpyxl", dtype=str)
        logger.debug(f"Excel прочитан, колонок: {len(df.columns)}, строк: {len(df)}")
        return df
    except Exception as e:
        raise FileFormatError(f"Не удалось прочитать Excel файл: {e}")


def load_instances(file_path: Union[str, Path]) -> InstanceBatch:
    """
    Читает и очищает пакетный файл.

    Raises:
        FileFormatError: файл не читается или нет колонок kind и n
    """
    df = parse_file(file_path)
    try:
        return clean_dataframe(df)
    except ValueError as e:
        raise FileFormatError(str(e))

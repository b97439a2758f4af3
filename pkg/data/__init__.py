"""
Data module — пакетные файлы экземпляров: парсинг, очистка, модели.
"""

from data.models import InstanceRow, InstanceBatch
from data.parser import parse_file, load_instances, FileFormatError
from data.cleaner import clean_dataframe, clean_int, clean_vector, normalize_column_name

__all__ = [
    # Models
    "InstanceRow",
    "InstanceBatch",
    # Parser
    "parse_file",
    "load_instances",
    "FileFormatError",
    # Cleaner
    "clean_dataframe",
    "clean_int",
    "clean_vector",
    "normalize_column_name",
]

"""
Pydantic модели пакетных файлов экземпляров.

Модели:
- InstanceRow: одна строка файла (один экземпляр производящей функции)
- InstanceBatch: все строки и предупреждения очистки
"""

from typing import Optional

from pydantic import BaseModel, Field


class InstanceRow(BaseModel):
    """
    Один экземпляр.

    Обязательные поля: kind, n
    Остальные зависят от вида (hmt/tree: b, k; vsast: l; tree: s; vsast: c)
    """
    kind: str = Field(..., description="hmt, tree, vsast, vsast-odd или triangle")
    n: int = Field(..., ge=1, description="Порядок")
    l: Optional[int] = Field(None, ge=1, description="Длина основания")
    b: Optional[int] = Field(None, description="Верхняя граница")
    k: list[int] = Field(default_factory=list, description="Нижняя строка")
    s: list[int] = Field(default_factory=list, description="Вектор усечения")
    c: Optional[list[int]] = Field(None, description="Вектор 1-столбцов")


class InstanceBatch(BaseModel):
    """Строки файла и что было исправлено при чтении"""
    rows: list[InstanceRow]
    parsing_warnings: list[str] = Field(default_factory=list)

"""
Модели оркестрации: виды производящих функций, методы, отчёты проверки.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


class MethodUnavailableError(Exception):
    """Метод неприменим к экземпляру (CLI: код 3)"""
    pass


class GenfunKind(str, Enum):
    HMT = "hmt"
    TREE = "tree"
    VSAST = "vsast"
    VSAST_ODD = "vsast-odd"
    TRIANGLE = "triangle"


class Method(str, Enum):
    BRUTEFORCE = "bruteforce"
    OPERATOR = "operator"
    CT = "ct"


class Suite(str, Enum):
    CORE = "core"
    APPENDIX_A = "appendixA"
    APPENDIX_B = "appendixB"
    LEMMAS = "lemmas"


class CheckStatus(str, Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    SKIPPED_RESOURCE = "skipped-resource"
    FLAGGED = "flagged"


class VerifyRecord(BaseModel):
    """Одна проверка: экземпляр, сравниваемые методы, статус"""
    instance: str = Field(..., description="Описание экземпляра")
    methods: list[str] = Field(..., description="Сравниваемые методы или стороны")
    status: CheckStatus = Field(..., description="Результат сравнения")
    values: dict[str, str] = Field(default_factory=dict, description="Значения при расхождении")
    seconds: Optional[float] = Field(None, description="Время (только с --timings)")


class VerifyReport(BaseModel):
    """Отчёт набора проверок; пустой список расхождений <=> код 0"""
    suite: Suite
    max_n: int
    seed: int
    records: list[VerifyRecord] = Field(default_factory=list)

    @property
    def mismatches(self) -> list[VerifyRecord]:
        return [r for r in self.records if r.status == CheckStatus.MISMATCH]

    def counts(self) -> dict[str, int]:
        result = {status.value: 0 for status in CheckStatus}
        for record in self.records:
            result[record.status.value] += 1
        return result

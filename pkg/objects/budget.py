"""
Бюджет узлов поиска для переборщиков.
"""

import logging
from typing import Optional

from config import settings

logger = logging.getLogger(__name__)


class ResourceBoundError(Exception):
    """Перебор превысил допустимый бюджет узлов"""
    pass


class NodeBudget:
    """Счётчик узлов поиска; при превышении бюджета — ResourceBoundError."""

    def __init__(self, label: str, limit: Optional[int] = None):
        self.label = label
        self.limit = settings.node_budget if limit is None else limit
        self.nodes = 0

    def tick(self, count: int = 1) -> None:
        self.nodes += count
        if self.nodes > self.limit:
            logger.warning(f"Бюджет узлов исчерпан: {self.label} ({self.limit})")
            raise ResourceBoundError(
                f"{self.label}: превышен бюджет {self.limit} узлов поиска "
                f"(переменная ASTRAP_NODE_BUDGET)"
            )

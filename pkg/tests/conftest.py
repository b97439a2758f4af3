"""Общие фикстуры тестов."""

import pytest

from config import settings


@pytest.fixture
def tiny_budget(monkeypatch):
    """Бюджет перебора, которого не хватает ни на что крупнее n = 2."""
    monkeypatch.setattr(settings, "node_budget", 40)
    return settings.node_budget


@pytest.fixture
def symbolic_cap(monkeypatch):
    """Символьный предел m <= 1: операторные формулы выше n = 2 отказывают."""
    monkeypatch.setattr(settings, "max_symbolic_m", 1)
    return settings.max_symbolic_m

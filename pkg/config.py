"""
Конфигурация ASTrap.
Загружает настройки из переменных окружения (префикс ASTRAP_) / .env файла.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Настройки приложения"""

    model_config = SettingsConfigDict(
        env_prefix="ASTRAP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # === Приложение ===
    app_name: str = "ASTrap"
    debug: bool = False  # Проверка обратных рядов умножением
    log_level: str = "WARNING"

    # === Лимиты перебора ===
    node_budget: int = Field(10**8, gt=0, description="Бюджет узлов поиска для переборщиков")
    max_symbolic_m: int = Field(5, ge=1, description="Максимальное m = ⌈n/2⌉ для операторного метода")

    # === Проверки ===
    default_seed: int = 20240101
    verify_workers: int = Field(1, ge=1, description="Число процессов для verify")
    qasym_points: int = Field(20, ge=1, description="Случайных рациональных точек на m")


# Глобальный экземпляр настроек
# Загружается при импорте модуля
settings = Settings()

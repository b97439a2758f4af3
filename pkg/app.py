"""
ASTrap — знакочередующиеся трапеции и половинные монотонные треугольники.

Точка входа командной строки.

Использование:
    python app.py enumerate trapezoid --n 2 --l 5
    python app.py genfun vsast --n 2 --l 3 --method ct
    python app.py verify --suite core --max-n 5
"""

import logging
import sys

from config import settings

# Настройка логирования: журнал в stderr, результат в stdout
logging.basicConfig(
    level=getattr(logging, settings.log_level.upper(), logging.WARNING),
    format='%(asctime)s | %(levelname)s | %(name)s | %(message)s',
    datefmt='%H:%M:%S',
    handlers=[
        logging.StreamHandler(sys.stderr)
    ]
)

logger = logging.getLogger(__name__)


def main() -> int:
    """Запуск командной строки."""
    from cli import main as cli_main

    logger.debug(f"{settings.app_name}: {' '.join(sys.argv[1:])}")
    return cli_main()


if __name__ == "__main__":
    sys.exit(main())

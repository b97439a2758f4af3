"""
CLI module — командная строка: подкоманды, типы аргументов, вывод.
"""

from cli.commands import (
    EXIT_OK,
    EXIT_MISMATCH,
    EXIT_USAGE,
    EXIT_RESOURCE,
    UsageError,
    build_parser,
    main,
)
from cli.arguments import int_vector, point_assignment
from cli.output import dumps, coefficient_json, json_lines

__all__ = [
    # Commands
    "EXIT_OK",
    "EXIT_MISMATCH",
    "EXIT_USAGE",
    "EXIT_RESOURCE",
    "UsageError",
    "build_parser",
    "main",
    # Arguments
    "int_vector",
    "point_assignment",
    # Output
    "dumps",
    "coefficient_json",
    "json_lines",
]

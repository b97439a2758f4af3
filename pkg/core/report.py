"""
Табличные отчёты: веса объектов, результаты проверок, пакетные вычисления.

Функции:
- weight_table(): распределение весов Q^q P^p по объектам
- coefficient_table(): Coefficient в виде таблицы (q_exp, p_exp, value)
- verify_table(): записи VerifyReport
- batch_genfun(): производящие функции для списка экземпляров
- dataframe_to_markdown(), write_table(): вывод в markdown, CSV, xlsx
"""

import logging
from collections import Counter
from pathlib import Path
from typing import Iterable, Literal, Optional, Union

import pandas as pd

from algebra import Coefficient
from core.genfun import GenfunQuery, compute_genfun
from core.models import Method, VerifyReport
from objects import ResourceBoundError, WeightMonomial

logger = logging.getLogger(__name__)

TableFormat = Literal["markdown", "csv", "xlsx"]

WEIGHT_COLUMNS = ["instance", "q_exp", "p_exp", "count"]


def weight_table(instance: str, items: Iterable[tuple[object, Optional[WeightMonomial]]]) -> pd.DataFrame:
    """
    Число объектов с каждым весом.

    Объекты без веса (несимметричные трапеции) попадают в строку с пустыми показателями.
    """
    counter: Counter = Counter()
    for _, weight in items:
        key = (weight.q_exp, weight.p_exp) if weight is not None else (None, None)
        counter[key] += 1
    rows = [
        {"instance": instance, "q_exp": q, "p_exp": p, "count": count}
        for (q, p), count in sorted(counter.items(), key=lambda item: (item[0][0] is None, item[0]))
    ]
    return pd.DataFrame(rows, columns=WEIGHT_COLUMNS)


def coefficient_table(instance: str, value: Coefficient) -> pd.DataFrame:
    rows = [
        {"instance": instance, "q_exp": q, "p_exp": p, "value": str(c)}
        for (q, p), c in sorted(value.terms.items())
    ]
    return pd.DataFrame(rows, columns=["instance", "q_exp", "p_exp", "value"])


def verify_table(report: VerifyReport) -> pd.DataFrame:
    rows = []
    for record in report.records:
        row = {
            "instance": record.instance,
            "methods": ",".join(record.methods),
            "status": record.status.value,
            "details": "; ".join(f"{k}={v}" for k, v in sorted(record.values.items())),
        }
        if record.seconds is not None:
            row["seconds"] = round(record.seconds, 3)
        rows.append(row)
    return pd.DataFrame(rows)


def batch_genfun(
    queries: list[GenfunQuery],
    methods: list[Method],
) -> pd.DataFrame:
    """
    Вычисляет производящие функции списка экземпляров.

    Нехватка ресурсов не прерывает пакет: в ячейке пишется "skipped".
    Столбец agree показывает, совпали ли все вычисленные значения.
    """
    rows = []
    for step, query in enumerate(queries, start=1):
        logger.debug(f"Шаг {step}/{len(queries)}: {query.describe()}")
        row = {"instance": query.describe()}
        values = []
        for method in methods:
            try:
                value = compute_genfun(query, method)
            except ResourceBoundError as e:
                logger.warning(f"{query.describe()} [{method.value}]: {e}")
                row[method.value] = "skipped"
                continue
            values.append(value)
            row[method.value] = str(value)
        row["agree"] = all(v == values[0] for v in values)
        rows.append(row)
    logger.info(f"Пакет: {len(rows)} экземпляров, методы {[m.value for m in methods]}")
    return pd.DataFrame(rows)


def dataframe_to_markdown(df: pd.DataFrame) -> str:
    """DataFrame в markdown-таблицу (пустые ячейки как "—")."""
    df_display = df.copy()
    for col in df_display.columns:
        df_display[col] = df_display[col].apply(lambda x: "—" if pd.isna(x) else x)
    return df_display.to_markdown(index=False)


def write_table(df: pd.DataFrame, fmt: TableFormat, path: Optional[Union[str, Path]] = None) -> str:
    """
    Выводит таблицу в нужном формате.

    Args:
        df: таблица
        fmt: markdown, csv или xlsx
        path: файл назначения (обязателен для xlsx)

    Returns:
        Текст таблицы (для xlsx — путь к файлу)

    Raises:
        ValueError: xlsx без пути или неизвестный формат
    """
    if fmt == "markdown":
        text = dataframe_to_markdown(df)
    elif fmt == "csv":
        text = df.to_csv(index=False, lineterminator="\n")
    elif fmt == "xlsx":
        if path is None:
            raise ValueError("Для xlsx нужен путь к файлу (--output)")
        df.to_excel(path, index=False, engine="openpyxl")
        logger.info(f"Таблица записана: {path}")
        return str(path)
    else:
        raise ValueError(f"Неизвестный формат таблицы: {fmt}")
    if path is not None:
        Path(path).write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
        logger.info(f"Таблица записана: {path}")
    return text

"""
Командная строка ASTrap.

Подкоманды:
- enumerate: перечисление объектов с весами (JSON-строки или таблица весов)
- genfun: производящая функция выбранным методом
- batch: производящие функции экземпляров из CSV/XLSX
- verify: наборы перекрёстных проверок
- ct-eval: константный член одной теоремы
- formula: замкнутые формулы (определители, 2-перечисление, LGV, sp)
- apply: операторное выражение к многочлену

Коды выхода: 0 успех, 1 расхождение, 2 ошибка использования, 3 отказ по ресурсам.
"""

import argparse
import logging
import sys
from fractions import Fraction
from typing import Optional, Sequence

from pydantic import ValidationError

from cli.arguments import add_instance_flags, int_vector, point_assignment
from cli.output import coefficient_json, dumps, json_lines
from config import settings
from constant_term import ct_qhtree, ct_vsast_pq, ct_vsast_pq_odd, ct_vsast_pqc, ct_vsastriangle
from core import (
    GenfunKind,
    GenfunQuery,
    Method,
    MethodUnavailableError,
    Suite,
    batch_genfun,
    compute_genfun,
    query_from_row,
    run_suite,
    verify_table,
    weight_table,
    write_table,
)
from data import FileFormatError, load_instances
from formulas import (
    IdentityViolationError,
    Partition,
    det_binom,
    hmt_det_closed,
    lgv_count,
    sp_all_ones,
    two_enumeration,
)
from objects import (
    PatternMode,
    ResourceBoundError,
    enumerate_astrapezoids,
    enumerate_halved_patterns,
    enumerate_vsast,
)
from operators import apply_operator, natural_sorted, operator_variables, parse_operator_expr, parse_polynomial

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


# === Парсер аргументов ===

def _add_table_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON (по умолчанию)")
    group.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="CSV-таблица весов")
    group.add_argument("--markdown", dest="fmt", action="store_const", const="markdown", help="Markdown-таблица")
    group.add_argument("--xlsx", dest="xlsx", metavar="PATH", default=None, help="Таблица в файл XLSX")
    parser.set_defaults(fmt="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="astrap",
        description="Знакочередующиеся трапеции, половинные монотонные треугольники и их производящие функции",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Подробнее в журнал (stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="Перечислить объекты с весами")
    p.add_argument("object", choices=["trapezoid", "vsast", "hmt", "tree", "gt"])
    add_instance_flags(p)
    _add_table_flags(p)

    p = sub.add_parser("genfun", help="Производящая функция")
    p.add_argument("kind", choices=[k.value for k in GenfunKind])
    p.add_argument("--method", choices=[m.value for m in Method] + ["all"], default=Method.CT.value)
    add_instance_flags(p, c=True)

    p = sub.add_parser("batch", help="Производящие функции экземпляров из файла")
    p.add_argument("path", help="CSV или XLSX с колонками kind, n, l, b, k, s, c")
    p.add_argument(
        "--methods",
        type=lambda text: [Method(m) for m in text.split(",") if m],
        default=list(Method),
        help="Методы через запятую",
    )
    _add_table_flags(p)

    p = sub.add_parser("verify", help="Наборы перекрёстных проверок")
    p.add_argument("--suite", choices=[s.value for s in Suite], required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--seed", type=int, default=settings.default_seed)
    p.add_argument("--workers", type=int, default=None, help="Число процессов (ASTRAP_VERIFY_WORKERS)")
    p.add_argument("--timings", action="store_true", help="Время каждой проверки в отчёте")
    _add_table_flags(p)

    p = sub.add_parser("ct-eval", help="Константный член теоремы")
    p.add_argument("--theorem", choices=["qhtree", "vsast-pqc", "vsast-pq", "vsast-odd", "triangle"], required=True)
    add_instance_flags(p, c=True)

    p = sub.add_parser("formula", help="Замкнутые формулы")
    p.add_argument("--name", choices=["det-binom", "hmt-det", "two-enum", "lgv", "sp"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--bottom", type=int_vector, default=[])
    p.add_argument("--variant", choices=["even", "odd"], default="even", help="Вариант det-binom")
    p.add_argument("--parts", type=int_vector, default=None, help="Разбиение для sp (иначе b-k)")
    p.add_argument("--parity", choices=["even", "odd"], default=None, help="Чётность sp (иначе по n)")
    p.add_argument("--sp-method", choices=["product", "jacobi_trudi"], default="product")

    p = sub.add_parser("apply", help="Применить операторное выражение к многочлену")
    p.add_argument("--op", required=True, help='Например "Id + Qfd_k1" или "E_{k1}^-1*E_k2"')
    p.add_argument("--poly", required=True, help='Например "k1^2 - Q*k2/2"')
    p.add_argument("--at", type=point_assignment, default=None, help="Подставить точку: k1=1,k2=3")
    return parser


# === Подкоманды ===

def cmd_enumerate(args: argparse.Namespace) -> int:
    n, l, b, bottom, s = args.n, args.l, args.b, args.bottom, args.s
    if args.object == "trapezoid":
        _require(l is not None, "Для trapezoid нужен --l")
        items = [(t, None) for t in enumerate_astrapezoids(n, l)]
        instance = f"trapezoid n={n} l={l}"
    elif args.object == "vsast":
        _require(l is not None, "Для vsast нужен --l")
        items = enumerate_vsast(n, l)
        instance = f"vsast n={n} l={l}"
    else:
        _require(b is not None and bottom, f"Для {args.object} нужны --b и --bottom")
        _require(not s or args.object in ("tree", "gt"), "--s допустим только для tree и gt")
        mode = PatternMode.WEAK_ROWS if args.object == "gt" else PatternMode.STRICT_ROWS
        items = enumerate_halved_patterns(n, b, bottom, s, mode=mode)
        instance = f"{args.object} n={n} b={b} k={bottom}" + (f" s={s}" if s else "")

    logger.info(f"{instance}: {len(items)} объектов")
    if args.fmt == "json" and args.xlsx is None:
        _print(json_lines(items))
    else:
        _emit_table(weight_table(instance, items), args)
    return EXIT_OK


def _query(args: argparse.Namespace, kind: GenfunKind) -> GenfunQuery:
    return GenfunQuery(kind=kind, n=args.n, l=args.l, b=args.b, k=args.bottom, s=args.s, c=args.c)


def cmd_genfun(args: argparse.Namespace) -> int:
    query = _query(args, GenfunKind(args.kind))
    if args.method != "all":
        _print(coefficient_json(compute_genfun(query, Method(args.method))))
        return EXIT_OK
    values = {method.value: compute_genfun(query, method) for method in Method}
    agree = all(v == values[Method.CT.value] for v in values.values())
    _print(dumps({**values, "agree": agree}))
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_batch(args: argparse.Namespace) -> int:
    batch = load_instances(args.path)
    queries = []
    for row in batch.rows:
        try:
            queries.append(query_from_row(row))
        except ValueError as e:
            logger.warning(f"Экземпляр {row.kind} n={row.n} пропущен: {e}")
    df = batch_genfun(queries, args.methods)
    _emit_table(df, args)
    return EXIT_OK if df.empty or df["agree"].all() else EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(Suite(args.suite), args.max_n, seed=args.seed, workers=args.workers, timings=args.timings)
    if args.fmt == "json" and args.xlsx is None:
        _print(dumps(report.model_dump(mode="json", exclude_none=True)))
    else:
        _emit_table(verify_table(report), args)
    return EXIT_MISMATCH if report.mismatches else EXIT_OK


def cmd_ct_eval(args: argparse.Namespace) -> int:
    theorem = args.theorem
    if theorem == "qhtree":
        _require(args.b is not None and args.bottom, "Для qhtree нужны --b и --bottom")
        value = ct_qhtree(args.n, args.b, args.bottom, args.s)
    elif theorem == "vsast-pqc":
        _require(args.l is not None and args.c, "Для vsast-pqc нужны --l и --c")
        value = ct_vsast_pqc(args.n, args.l, args.c)
    elif theorem == "vsast-pq":
        _require(args.l is not None, "Для vsast-pq нужен --l")
        value = ct_vsast_pq(args.n, args.l)
    elif theorem == "vsast-odd":
        value = ct_vsast_pq_odd(args.n)
    else:
        value = ct_vsastriangle(args.n)
    _print(coefficient_json(value))
    return EXIT_OK


def cmd_formula(args: argparse.Namespace) -> int:
    name = args.name
    if name == "det-binom":
        _require(args.bottom, "Для det-binom нужен --bottom")
        value = det_binom(args.variant, args.bottom)
    elif name == "sp":
        if args.parts is not None:
            lam = Partition(parts=args.parts)
        else:
            _require(args.b is not None and args.bottom, "Для sp нужны --parts или --b и --bottom")
            lam = Partition.from_bottom_row(args.b, args.bottom)
        parity = args.parity
        if parity is None:
            _require(args.n is not None, "Для sp нужны --parity или --n")
            parity = "odd" if args.n % 2 else "even"
        value = sp_all_ones(lam, parity, args.sp_method)
    else:
        _require(args.n is not None and args.b is not None, f"Для {name} нужны --n, --b и --bottom")
        handler = {"hmt-det": hmt_det_closed, "two-enum": two_enumeration, "lgv": lgv_count}[name]
        value = handler(args.n, args.b, args.bottom)
    _print(_decimal(value))
    return EXIT_OK


def _decimal(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def cmd_apply(args: argparse.Namespace) -> int:
    op = parse_operator_expr(args.op)
    draft = parse_polynomial(args.poly)
    variables = natural_sorted(set(draft.variables) | operator_variables(op) | set(args.at or {}))
    result = apply_operator(op, parse_polynomial(args.poly, variables))
    if args.at is None:
        _print(dumps({"variables": list(variables), "polynomial": str(result)}))
    else:
        _print(coefficient_json(result.evaluate(args.at)))
    return EXIT_OK


# === Запуск ===

COMMANDS = {
    "enumerate": cmd_enumerate,
    "genfun": cmd_genfun,
    "batch": cmd_batch,
    "verify": cmd_verify,
    "ct-eval": cmd_ct_eval,
    "formula": cmd_formula,
    "apply": cmd_apply,
}


class UsageError(ValueError):
    """Недостающий или несовместимый флаг"""
    pass


def _require(condition, message: str) -> None:
    if not condition:
        raise UsageError(message)


def _print(text: str) -> None:
    sys.stdout.write(text + ("" if text.endswith("\n") or not text else "\n"))


def _emit_table(df, args: argparse.Namespace) -> None:
    if args.xlsx is not None:
        write_table(df, "xlsx", args.xlsx)
        return
    fmt = "csv" if args.fmt == "json" else args.fmt
    _print(write_table(df, fmt))


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Разбор аргументов и выполнение подкоманды.

    Returns:
        Код выхода
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)

    logger.debug(f"Команда: {args.command}")
    try:
        return COMMANDS[args.command](args)
    except IdentityViolationError as e:
        logger.error(f"Тождество нарушено: {e}")
        sys.stderr.write(f"astrap: {e}\n")
        return EXIT_MISMATCH
    except (ResourceBoundError, MethodUnavailableError) as e:
        logger.error(f"Отказ по ресурсам: {e}")
        sys.stderr.write(f"astrap: {e}\n")
        return EXIT_RESOURCE
    except (ValueError, ValidationError, FileFormatError) as e:
        logger.error(f"Ошибка использования: {e}")
        sys.stderr.write(f"astrap: {e}\n")
        return EXIT_USAGE

"""
Наборы проверок: перекрёстное сравнение методов и тождеств.

Наборы:
- core: brute force = операторная формула = константный член
- appendixA: 2-перечисление и сдвиг показателя q-веса
- appendixB: половинные схемы Гельфанда-Цетлина, пути, симплектические характеры
- lemmas: леммы о суммировании, QASym, определители, симметризатор

Функции:
- build_tasks(): список задач набора (детерминированный порядок)
- run_suite(): выполнение задач (в пуле процессов при workers > 1) и отчёт
"""

import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations, combinations_with_replacement
from typing import Callable, Optional

from algebra import Coefficient, MultiPoly, TruncSeries
from config import settings
from constant_term import (
    QasymVariant,
    ct_vsast_pq_odd,
    ct_vsastriangle,
    random_qasym_points,
    stanton_stembridge_check,
    verify_qasym,
)
from core.genfun import GenfunQuery, compute_genfun
from core.models import CheckStatus, GenfunKind, Method, Suite, VerifyRecord, VerifyReport
from formulas import (
    IdentityViolationError,
    Partition,
    det_binom,
    exponent_shift_report,
    gt_pattern_paths,
    hmt_det_closed,
    lgv_count,
    sp_all_ones,
    two_enumeration,
)
from objects import (
    PatternMode,
    ResourceBoundError,
    enumerate_halved_patterns,
    enumerate_vsasm,
    equal_bottom_pairs,
    genfun_from_list,
)
from operators import (
    admissible_c_vectors,
    check_app_sum_even,
    check_app_sum_odd,
    check_sum_op_alt,
    check_sum_op_normal,
    hmt_pq_genfun,
    qhmt_genfun,
)

logger = logging.getLogger(__name__)

# Верхняя граница элементов в сетках проверок
GRID_B = 2
# Наибольшее m для проверки лемм (символьное применение операторов)
LEMMA_MAX_M = 4
# Наибольшее n для проверки путей на каждой схеме
PATHS_MAX_N = 5
# Наибольшее n для перебора всех множеств равных нижних пар
HMT_PQ_MAX_N = 5
# Случайных точек на размер определителя
DET_POINTS_PER_SIZE = 25


# === Сетки экземпляров ===

def strict_bottoms(m: int, b: int, slack: int = 2, spread: int = 3) -> list[list[int]]:
    """Строго возрастающие k длины m с b - k_m <= slack и k_m - k_1 <= m - 1 + spread."""
    result = []
    for top in range(b - slack, b + 1):
        for rest in combinations(range(top - m + 1 - spread, top), m - 1):
            result.append(list(rest) + [top])
    return result


def weak_bottoms(m: int, b: int, slack: int = 3) -> list[list[int]]:
    """Нестрого возрастающие k длины m со значениями в [b - slack, b]."""
    return [list(k) for k in combinations_with_replacement(range(b - slack, b + 1), m)]


def truncation_vectors(n: int) -> list[list[int]]:
    """Все ненулевые невозрастающие s с s_j <= n + 1 - 2j."""
    m = (n + 1) // 2
    result = []

    def extend(prefix: list[int]) -> None:
        j = len(prefix) + 1
        if j > m:
            if any(prefix):
                result.append(list(prefix))
            return
        upper = n + 1 - 2 * j
        if prefix:
            upper = min(upper, prefix[-1])
        for value in range(upper, -1, -1):
            extend(prefix + [value])

    extend([])
    return result


# === Сравнение ===

def _compare(
    instance: str,
    sides: dict[str, Callable[[], object]],
    check: Optional[Callable[[object], Optional[str]]] = None,
) -> VerifyRecord:
    """
    Вычисляет все стороны и сравнивает их; нехватка ресурсов -> skipped-resource.

    check — дополнительное условие на совпавшее значение (текст ошибки или None).
    """
    start = time.perf_counter()
    values = {}
    try:
        for name, compute in sides.items():
            values[name] = compute()
    except ResourceBoundError as e:
        logger.warning(f"{instance}: пропуск ({e})")
        return VerifyRecord(
            instance=instance,
            methods=list(sides),
            status=CheckStatus.SKIPPED_RESOURCE,
            values={"reason": str(e)},
            seconds=time.perf_counter() - start,
        )
    except IdentityViolationError as e:
        logger.error(f"{instance}: {e}")
        return VerifyRecord(
            instance=instance,
            methods=list(sides),
            status=CheckStatus.MISMATCH,
            values={"error": str(e)},
            seconds=time.perf_counter() - start,
        )
    reference = next(iter(values.values()))
    agree = all(value == reference for value in values.values())
    if not agree:
        logger.error(f"{instance}: расхождение {values}")
    elif check is not None and (problem := check(reference)) is not None:
        logger.error(f"{instance}: {problem}")
        return VerifyRecord(
            instance=instance,
            methods=list(sides),
            status=CheckStatus.MISMATCH,
            values={"check": problem},
            seconds=time.perf_counter() - start,
        )
    return VerifyRecord(
        instance=instance,
        methods=list(sides),
        status=CheckStatus.MATCH if agree else CheckStatus.MISMATCH,
        values={} if agree else {name: str(value) for name, value in values.items()},
        seconds=time.perf_counter() - start,
    )


def _paired(compute: Callable[[], tuple], first: str, second: str) -> dict[str, Callable[[], object]]:
    """Две стороны, вычисляемые одним вызовом compute."""
    cache: dict = {}

    def side(index: int):
        if "value" not in cache:
            cache["value"] = compute()
        return cache["value"][index]

    return {first: lambda: side(0), second: lambda: side(1)}


def _methods_record(query: GenfunQuery, memo: dict) -> VerifyRecord:
    return _compare(
        query.describe(),
        {method.value: (lambda method=method: compute_genfun(query, method, memo)) for method in Method},
        check=_polynomiality,
    )


def _polynomiality(value: Coefficient) -> Optional[str]:
    if not value.has_nonnegative_integer_coefficients() or not value.is_polynomial():
        return f"не многочлен с неотрицательными целыми коэффициентами: {value}"
    return None


# === Набор core ===

def _core_hmt(n: int) -> list[VerifyRecord]:
    m = (n + 1) // 2
    memo: dict = {}
    return [
        _methods_record(GenfunQuery(kind=GenfunKind.HMT, n=n, b=GRID_B, k=k), memo)
        for k in strict_bottoms(m, GRID_B)
    ]


def _core_tree(n: int) -> list[VerifyRecord]:
    m = (n + 1) // 2
    records = []
    memo: dict = {}
    for s in truncation_vectors(n):
        # первые три нижних строки сетки на каждую форму
        for k in strict_bottoms(m, GRID_B, slack=1, spread=1)[:3]:
            records.append(_methods_record(GenfunQuery(kind=GenfunKind.TREE, n=n, b=GRID_B, k=k, s=s), memo))
    return records


def _core_vsast(n: int) -> list[VerifyRecord]:
    memo: dict = {}
    records = [
        _methods_record(GenfunQuery(kind=GenfunKind.VSAST, n=n, l=l), memo)
        for l in (1, 3, 5)
    ]
    if n <= 4:
        for l in (1, 3):
            for c in admissible_c_vectors(n):
                records.append(_methods_record(GenfunQuery(kind=GenfunKind.VSAST, n=n, l=l, c=list(c)), memo))
    return records


def _core_vsast_odd(n: int) -> list[VerifyRecord]:
    return [
        _methods_record(GenfunQuery(kind=GenfunKind.VSAST_ODD, n=n, l=1), {}),
        _compare(
            f"vsast-odd n={n} = 2 triangle",
            {
                "vsast-odd": lambda: ct_vsast_pq_odd(n),
                "2*triangle": lambda: ct_vsastriangle(n) * 2,
            },
        ),
    ]


def _core_triangle(n: int) -> list[VerifyRecord]:
    return [_methods_record(GenfunQuery(kind=GenfunKind.TRIANGLE, n=n), {})]


def _core_hmt_pq(n: int) -> list[VerifyRecord]:
    m = (n + 1) // 2
    records = []
    memo: dict = {}
    for k in strict_bottoms(m, GRID_B, slack=1, spread=1)[:3]:
        try:
            patterns = enumerate_halved_patterns(n, GRID_B, k)
        except ResourceBoundError as e:
            logger.warning(f"hmt-pq n={n} k={k}: пропуск ({e})")
            records.append(VerifyRecord(
                instance=f"hmt-pq n={n} b={GRID_B} k={k}",
                methods=["bruteforce", "operator"],
                status=CheckStatus.SKIPPED_RESOURCE,
                values={"reason": str(e)},
            ))
            continue
        for size in range(m + 1):
            for l_eq in combinations(range(1, m + 1), size):
                selected = [(p, w) for p, w in patterns if equal_bottom_pairs(p) == set(l_eq)]
                records.append(_compare(
                    f"hmt-pq n={n} b={GRID_B} k={k} L={list(l_eq)}",
                    {
                        "bruteforce": lambda selected=selected: genfun_from_list(selected).substitute(P=1),
                        "operator": lambda k=k, l_eq=l_eq: hmt_pq_genfun(n, GRID_B, k, (), l_eq, memo),
                    },
                ))
    return records


def _core_vsasm(size: int) -> list[VerifyRecord]:
    half = (size - 1) // 2
    return [_compare(
        f"vsasm N={size}",
        {
            "bruteforce": lambda: len(enumerate_vsasm(size)),
            "operator": lambda: qhmt_genfun(size - 1, half, list(range(1, half + 1))).evaluate(1),
        },
    )]


# === Набор appendixA ===

def _appendix_a(n: int) -> list[VerifyRecord]:
    m = (n + 1) // 2
    records = []
    memo: dict = {}
    for k in strict_bottoms(m, GRID_B):
        query = GenfunQuery(kind=GenfunKind.HMT, n=n, b=GRID_B, k=k)
        records.append(_compare(
            f"two-enum n={n} b={GRID_B} k={k}",
            {
                "product": lambda k=k: two_enumeration(n, GRID_B, k),
                "bruteforce": lambda query=query: compute_genfun(query, Method.BRUTEFORCE).evaluate(2),
                "operator": lambda query=query: compute_genfun(query, Method.OPERATOR, memo).evaluate(2),
            },
        ))
        records.append(_shift_record(n, k))
    return records


def _shift_record(n: int, k: list[int]) -> VerifyRecord:
    instance = f"q-shift n={n} b={GRID_B} k={k}"
    try:
        report = exponent_shift_report(n, GRID_B, k)
    except ResourceBoundError as e:
        return VerifyRecord(instance=instance, methods=["predicted", "observed"],
                            status=CheckStatus.SKIPPED_RESOURCE, values={"reason": str(e)})
    if not report.flagged:
        return VerifyRecord(instance=instance, methods=["predicted", "observed"], status=CheckStatus.MATCH)
    return VerifyRecord(
        instance=instance,
        methods=["predicted", "observed"],
        status=CheckStatus.FLAGGED,
        values={
            "flagged": f"{len(report.flagged)}/{report.total}",
            "observed_shifts": str(report.observed_shifts),
            "multisets_agree": str(report.multisets_agree),
            "observed_shift": str(report.observed_shift),
            "corrected_agree": str(report.corrected_agree),
        },
    )


# === Набор appendixB ===

def _appendix_b(n: int) -> list[VerifyRecord]:
    m = (n + 1) // 2
    parity = "odd" if n % 2 else "even"
    records = []
    for k in weak_bottoms(m, GRID_B):
        lam = Partition.from_bottom_row(GRID_B, k)
        patterns = lambda k=k: enumerate_halved_patterns(n, GRID_B, k, mode=PatternMode.WEAK_ROWS)
        records.append(_compare(
            f"halved-gt n={n} b={GRID_B} k={k}",
            {
                "bruteforce": lambda: len(patterns()),
                "lgv": lambda k=k: lgv_count(n, GRID_B, k),
                "hmt-det": lambda k=k: hmt_det_closed(n, GRID_B, k),
                "sp-product": lambda lam=lam: sp_all_ones(lam, parity, "product"),
                "sp-jacobi-trudi": lambda lam=lam: sp_all_ones(lam, parity, "jacobi_trudi"),
            },
        ))
        if n <= PATHS_MAX_N:
            records.append(_paths_record(n, k, patterns))
    return records


def _paths_record(n: int, k: list[int], patterns: Callable[[], list]) -> VerifyRecord:
    def families() -> int:
        return len({tuple(map(tuple, gt_pattern_paths(p, GRID_B))) for p, _ in patterns()})

    return _compare(
        f"lgv-paths n={n} b={GRID_B} k={k}",
        {"patterns": lambda: len(patterns()), "path-families": families},
    )


# === Набор lemmas ===

def _random_strict(rng: random.Random, m: int, b: int) -> list[int]:
    return sorted(rng.sample(range(b - m - 3, b + 1), m))


def _lemmas(m: int, seed: int) -> list[VerifyRecord]:
    rng = random.Random(seed * 1000 + m)
    records = []
    for _ in range(3):
        b = rng.randint(0, 3)
        k = _random_strict(rng, m, b)
        for name, check in (
            ("sum-op-normal", check_sum_op_normal),
            ("sum-op-alt", check_sum_op_alt),
            ("app-sum-odd", check_app_sum_odd),
            ("app-sum-even", check_app_sum_even),
        ):
            records.append(_compare(
                f"{name} n={m} b={b} k={k}",
                _paired(lambda check=check, k=k, b=b: check(m, k, b), "lhs", "rhs"),
            ))
    return records


def _qasym(m: int, seed: int) -> list[VerifyRecord]:
    points = random_qasym_points(m, settings.qasym_points, seed + m)
    records = []
    for variant in QasymVariant:
        report = verify_qasym(m, points, variant)
        status = CheckStatus.MATCH if not report.failures else CheckStatus.MISMATCH
        values = {"checked": str(report.checked), "skipped": str(len(report.skipped))}
        if report.failures:
            values["failures"] = "; ".join(report.failures[:3])
        records.append(VerifyRecord(
            instance=f"{variant.value} m={m}",
            methods=["antisymmetrized", "product"],
            status=status,
            values=values,
        ))
    return records


def _determinants(seed: int) -> list[VerifyRecord]:
    rng = random.Random(seed)
    records = []
    for m in range(1, 5):
        for _ in range(DET_POINTS_PER_SIZE):
            k = [rng.randint(-6, 6) for _ in range(m)]
            for variant in ("even", "odd"):
                records.append(_compare(
                    f"det-binom {variant} k={k}",
                    {"determinant": lambda variant=variant, k=k: det_binom(variant, k)},
                ))
    return records


def _stanton_stembridge(m: int, seed: int) -> list[VerifyRecord]:
    rng = random.Random(seed + 7 * m)
    variables = tuple(f"x{i}" for i in range(1, m + 1))
    poly = MultiPoly.constant(variables, 1)
    for name in variables:
        x = MultiPoly.variable(variables, name)
        poly = poly * (x * x * rng.randint(-3, 3) + x * rng.randint(-3, 3) + rng.randint(1, 3))
    poly = poly * (sum((MultiPoly.variable(variables, v) for v in variables), MultiPoly.constant(variables, 0)) + 1)
    series = TruncSeries.from_poly(poly, variables, [4] * m)
    return [_compare(
        f"stanton-stembridge m={m}",
        _paired(lambda: stanton_stembridge_check(series, [-2] * m), "direct", "symmetrized"),
    )]


# === Выполнение ===

_TASKS: dict[str, Callable[..., list[VerifyRecord]]] = {
    "core_hmt": _core_hmt,
    "core_tree": _core_tree,
    "core_vsast": _core_vsast,
    "core_vsast_odd": _core_vsast_odd,
    "core_triangle": _core_triangle,
    "core_hmt_pq": _core_hmt_pq,
    "core_vsasm": _core_vsasm,
    "appendix_a": _appendix_a,
    "appendix_b": _appendix_b,
    "lemmas": _lemmas,
    "qasym": _qasym,
    "determinants": _determinants,
    "stanton_stembridge": _stanton_stembridge,
}


def build_tasks(suite: Suite, max_n: int, seed: int) -> list[tuple[str, tuple]]:
    """Задачи набора: пары (имя, аргументы)."""
    suite = Suite(suite)
    tasks: list[tuple[str, tuple]] = []
    if suite == Suite.CORE:
        for n in range(1, max_n + 1):
            tasks.append(("core_hmt", (n,)))
            if n >= 2:
                tasks.append(("core_tree", (n,)))
            if n % 2 == 0:
                tasks.append(("core_vsast", (n,)))
            else:
                tasks.append(("core_vsast_odd", (n,)))
            if n % 2 == 1:
                tasks.append(("core_triangle", (n,)))
            if n <= HMT_PQ_MAX_N:
                tasks.append(("core_hmt_pq", (n,)))
            if n % 2 == 0:
                tasks.append(("core_vsasm", (n + 1,)))
    elif suite == Suite.APPENDIX_A:
        tasks = [("appendix_a", (n,)) for n in range(1, max_n + 1)]
    elif suite == Suite.APPENDIX_B:
        tasks = [("appendix_b", (n,)) for n in range(1, max_n + 1)]
    elif suite == Suite.LEMMAS:
        top = min(max_n, LEMMA_MAX_M)
        tasks = [("lemmas", (m, seed)) for m in range(1, top + 1)]
        tasks += [("qasym", (m, seed)) for m in range(1, top + 1)]
        tasks += [("stanton_stembridge", (m, seed)) for m in range(1, top + 1)]
        tasks.append(("determinants", (seed,)))
    return tasks


def _run_task(task: tuple[str, tuple]) -> list[VerifyRecord]:
    name, args = task
    return _TASKS[name](*args)


def run_suite(
    suite: Suite,
    max_n: int,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    timings: bool = False,
) -> VerifyReport:
    """
    Выполняет набор проверок.

    Args:
        suite: имя набора
        max_n: наибольший порядок
        seed: зерно случайных точек (по умолчанию settings.default_seed)
        workers: число процессов (по умолчанию settings.verify_workers)
        timings: сохранять ли время проверок в отчёте

    Returns:
        VerifyReport; записи отсортированы по экземпляру, вывод не зависит от workers
    """
    suite = Suite(suite)
    seed = settings.default_seed if seed is None else seed
    workers = settings.verify_workers if workers is None else workers
    if max_n < 1:
        raise ValueError(f"max_n должно быть >= 1: {max_n}")

    tasks = build_tasks(suite, max_n, seed)
    logger.info(f"Набор {suite.value}: {len(tasks)} задач, max_n={max_n}, seed={seed}, процессов {workers}")

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(task) for task in tasks]

    records = [record for chunk in chunks for record in chunk]
    records.sort(key=lambda r: (r.instance, r.methods))
    if not timings:
        records = [record.model_copy(update={"seconds": None}) for record in records]

    report = VerifyReport(suite=suite, max_n=max_n, seed=seed, records=records)
    counts = report.counts()
    logger.info(f"Набор {suite.value} завершён: {counts}")
    if report.mismatches:
        logger.error(f"Расхождений: {len(report.mismatches)}")
    return report

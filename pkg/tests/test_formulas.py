"""Определители, 2-перечисление, пути и симплектические характеры."""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from formulas import (
    IdentityViolationError,
    LozengeRegion,
    Partition,
    binomial,
    corrected_exponent_shift,
    det_binom,
    exponent_shift_report,
    gt_pattern_paths,
    hmt_det_closed,
    hmt_product,
    lgv_count,
    lgv_endpoints,
    lozenge_region,
    q_weight_exponent_shift,
    rational_det,
    sp_all_ones,
    two_enumeration,
)
from objects import HalvedPattern, InvalidObjectError, PatternMode, enumerate_halved_patterns
from operators import qhmt_genfun, qhmt_operand
from tests.strategies import strictly_increasing

# Схема порядка 6 с b = 3 и нижней строкой 1,2,2 и её три пути
GT_PATTERN_6 = HalvedPattern(
    n=6,
    mode=PatternMode.WEAK_ROWS,
    rows_bottom_up=[[1, 2, 2], [1, 2, 3], [1, 3], [1, 3], [2], [2]],
    b=3,
)
GT_PATHS_6 = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (3, 2), (4, 2), (5, 2), (5, 3)],
    [(0, 3), (1, 3), (1, 4), (2, 4), (3, 4)],
    [(0, 4), (0, 5), (1, 5)],
]


class TestDeterminants:
    def test_rational_det(self):
        assert rational_det([]) == 1
        assert rational_det([[1, 2], [3, 4]]) == -2
        assert rational_det([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)

    def test_rational_det_square(self):
        with pytest.raises(ValueError):
            rational_det([[1, 2]])

    @pytest.mark.parametrize("top,bottom,expected", [(5, 2, 10), (3, 0, 1), (-1, 0, 0), (2, 3, 0), (4, -1, 0)])
    def test_path_binomial(self, top, bottom, expected):
        assert binomial(top, bottom) == expected

    @pytest.mark.parametrize("variant", ["even", "odd"])
    @given(k=st.lists(st.integers(-6, 6), min_size=0, max_size=4))
    @settings(max_examples=25, deadline=None)
    def test_det_binom_identity(self, variant, k):
        det_binom(variant, k)

    def test_det_binom_values(self):
        assert det_binom("even", [5]) == 5
        assert det_binom("odd", [5]) == 1
        assert det_binom("even", []) == 1

    def test_det_binom_variant(self):
        with pytest.raises(ValueError):
            det_binom("middle", [1])

    @given(data=st.data())
    @settings(max_examples=40, deadline=None)
    def test_hmt_det_closed(self, data):
        n = data.draw(st.integers(1, 7))
        b = data.draw(st.integers(-3, 4))
        k = data.draw(st.lists(st.integers(-5, 5), min_size=(n + 1) // 2, max_size=(n + 1) // 2))
        value = hmt_det_closed(n, b, k)
        assert value == hmt_product(n, b, k)
        point = {f"k{i}": x for i, x in enumerate(k, start=1)}
        assert qhmt_operand(n, b).evaluate(point) == value

    def test_hmt_det_closed_length(self):
        with pytest.raises(ValueError):
            hmt_det_closed(3, 2, [0])

    def test_violation_is_assertion(self):
        assert issubclass(IdentityViolationError, AssertionError)


class TestTwoEnumeration:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_genfun_at_two(self, n):
        m = (n + 1) // 2
        for k in combinations(range(-1, 3), m):
            assert two_enumeration(n, 2, k) == qhmt_genfun(n, 2, k).evaluate(Q=2), k

    def test_order_two(self):
        assert two_enumeration(2, 5, [1]) == 9

    def test_rejects_bad_bottom(self):
        with pytest.raises(ValueError):
            two_enumeration(3, 2, [2, 0])
        with pytest.raises(ValueError):
            two_enumeration(3, 1, [0, 2])

    def test_shift_prediction(self):
        assert q_weight_exponent_shift(4, 0) == 2
        assert q_weight_exponent_shift(5, 3) == 5

    def test_shift_report(self):
        report = exponent_shift_report(4, 2, [1, 2])
        assert report.total == len(enumerate_halved_patterns(4, 2, [1, 2]))
        assert len(report.flagged) <= report.total
        assert [[1], [1], [1, 2], [1, 2]] not in [r.rows for r in report.flagged]
        if not report.flagged:
            assert report.multisets_agree
            assert report.observed_shifts == [2]

    @pytest.mark.parametrize("n,b,k", [(3, 2, [0, 2]), (5, 2, [0, 1, 2]), (5, 1, [-1, 0, 1])])
    def test_odd_shift_is_ceiling(self, n, b, k):
        """Для нечётного n q-вес больше Q-веса на ⌈n/2⌉, а не на ⌊n/2⌋"""
        report = exponent_shift_report(n, b, k)
        assert report.observed_shift == (n + 1) // 2
        assert report.corrected_agree
        assert not report.multisets_agree
        assert len(report.flagged) == report.total

    def test_shift_three_rows(self):
        report = exponent_shift_report(3, 2, [0, 2])
        assert report.total == 6
        assert report.observed_shifts == [2]
        assert corrected_exponent_shift(3, 1) == 3
        assert {(r.q_exp, r.observed) for r in report.flagged} == {(0, 2), (1, 3), (2, 4)}

    def test_even_shift_unchanged(self):
        for q_exp in range(4):
            assert corrected_exponent_shift(4, q_exp) == q_weight_exponent_shift(4, q_exp)


class TestPaths:
    def test_endpoints(self):
        assert lgv_endpoints(6, 3, [1, 2, 2]) == [
            ((0, 1), (5, 3)),
            ((0, 3), (3, 4)),
            ((0, 4), (1, 5)),
        ]

    def test_pattern_paths(self):
        assert gt_pattern_paths(GT_PATTERN_6, 3) == GT_PATHS_6

    def test_paths_end_at_endpoints(self):
        ends = [(path[0], path[-1]) for path in GT_PATHS_6]
        assert ends == lgv_endpoints(6, 3, [1, 2, 2])

    @pytest.mark.parametrize("n,b", [(1, 2), (2, 2), (3, 2), (4, 1), (5, 1), (6, 1)])
    def test_count_matches_enumeration(self, n, b):
        m = (n + 1) // 2
        for k in combinations_with_replacement(range(-1, b + 1), m):
            expected = len(enumerate_halved_patterns(n, b, list(k), mode=PatternMode.WEAK_ROWS))
            assert lgv_count(n, b, k) == expected, k

    def test_every_pattern_gives_disjoint_paths(self):
        for pattern, _ in enumerate_halved_patterns(4, 2, [0, 1], mode=PatternMode.WEAK_ROWS):
            paths = gt_pattern_paths(pattern, 2)
            assert [p[0] for p in paths] == [s for s, _ in lgv_endpoints(4, 2, [0, 1])]

    def test_truncated_pattern_rejected(self):
        tree = HalvedPattern(n=3, s=[1, 0], rows_bottom_up=[[None, 1], [0], [0]], b=2)
        with pytest.raises(InvalidObjectError):
            gt_pattern_paths(tree, 2)

    def test_bad_bottom(self):
        with pytest.raises(InvalidObjectError):
            lgv_count(3, 1, [0, 2])
        with pytest.raises(InvalidObjectError):
            lgv_count(3, 2, [2, 1])

    def test_lozenge_region(self):
        assert lozenge_region(6, 3, [1, 2, 2]) == LozengeRegion(s=6, t=2, removed=[1, 3, 4])
        assert lozenge_region(0, 3, []) == LozengeRegion(s=0, t=0, removed=[])


class TestSymplectic:
    @pytest.mark.parametrize("parity", ["even", "odd"])
    @given(parts=st.lists(st.integers(0, 5), max_size=4).map(lambda p: sorted(p, reverse=True)))
    @settings(max_examples=30, deadline=None)
    def test_product_equals_jacobi_trudi(self, parity, parts):
        lam = Partition(parts=parts)
        assert sp_all_ones(lam, parity, "product") == sp_all_ones(lam, parity, "jacobi_trudi")

    def test_small_values(self):
        assert sp_all_ones(Partition(), "even") == 1
        assert sp_all_ones(Partition(parts=[1]), "even") == 2
        assert sp_all_ones(Partition(parts=[1, 0]), "even") == 4
        assert sp_all_ones(Partition(parts=[1, 0]), "even", "jacobi_trudi") == 4

    def test_from_bottom_row(self):
        assert Partition.from_bottom_row(3, [1, 2, 2]).parts == [2, 1, 1]

    @given(k=strictly_increasing(2, -3, 3), extra=st.integers(0, 2))
    @settings(max_examples=20, deadline=None)
    def test_bottom_row_partitions(self, k, extra):
        lam = Partition.from_bottom_row(k[-1] + extra, k)
        assert sp_all_ones(lam, "odd") == sp_all_ones(lam, "odd", "jacobi_trudi")

    def test_invalid(self):
        with pytest.raises(ValueError):
            Partition(parts=[1, 2])
        with pytest.raises(ValueError):
            sp_all_ones(Partition(parts=[1]), "mixed")

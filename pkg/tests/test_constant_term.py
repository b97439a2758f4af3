"""Формулы свободного члена и симметризатор."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from algebra import Coefficient, MultiPoly, TruncSeries, TruncationError
from constant_term import (
    QasymVariant,
    SingularPointError,
    SymmetrizeMode,
    ct_evaluate,
    ct_qhtree,
    ct_qhtree_formula,
    ct_vsast_pq,
    ct_vsast_pq_odd,
    ct_vsast_pqc,
    ct_vsastriangle,
    random_qasym_points,
    stanton_stembridge_check,
    symmetrize,
    verify_qasym,
)
from objects import (
    InvalidObjectError,
    enumerate_as_triangles,
    enumerate_halved_patterns,
    enumerate_vsast,
    genfun_from_list,
)
from operators import admissible_c_vectors, qhtree_genfun, vsast_pq_genfun_op, vsast_pqc_genfun_op


class TestTreeFormula:
    @pytest.mark.parametrize("n,b,k,s", [
        (1, 0, [0], []),
        (2, 3, [1], []),
        (3, 2, [0, 2], []),
        (3, 2, [0, 1], [1, 0]),
        (4, 2, [0, 1], []),
        (5, 2, [-3, -2, -1], [2, 1, 0]),
    ])
    def test_matches_operator_and_enumeration(self, n, b, k, s):
        value = ct_qhtree(n, b, k, s)
        assert value == qhtree_genfun(n, b, k, s)
        assert value == genfun_from_list(enumerate_halved_patterns(n, b, k, s)).substitute(P=1)

    def test_generous_caps_agree(self):
        formula = ct_qhtree_formula(3, 2, [0, 2])
        caps = {v: cap + 3 for v, cap in formula.tight_caps().items()}
        assert ct_evaluate(formula, caps) == ct_evaluate(formula)

    def test_short_caps_fail(self):
        formula = ct_qhtree_formula(3, 2, [0, 2])
        caps = {v: 0 for v in formula.variables}
        with pytest.raises(TruncationError):
            ct_evaluate(formula, caps)

    def test_bad_shape(self):
        with pytest.raises(InvalidObjectError):
            ct_qhtree(3, 2, [0, 2], [0, 1])
        with pytest.raises(InvalidObjectError):
            ct_qhtree(3, 2, [0], [])


class TestVsastFormulas:
    @pytest.mark.parametrize("n,l", [(2, 3), (2, 5), (4, 3), (4, 5)])
    def test_per_c_matches_operator(self, n, l):
        for c in admissible_c_vectors(n):
            assert ct_vsast_pqc(n, l, c) == vsast_pqc_genfun_op(n, l, c), c

    @pytest.mark.parametrize("n,l", [(2, 3), (2, 5), (4, 3), (4, 5)])
    def test_total_matches_enumeration(self, n, l):
        expected = genfun_from_list(enumerate_vsast(n, l))
        assert ct_vsast_pq(n, l) == expected
        assert vsast_pq_genfun_op(n, l) == expected

    def test_small_values(self):
        assert ct_vsast_pq(2, 3) == Coefficient.one()
        assert ct_vsast_pq_odd(1) == Coefficient.const(2)
        assert ct_vsastriangle(1) == Coefficient.one()

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_odd_is_two_triangles(self, n):
        assert ct_vsast_pq_odd(n) == ct_vsastriangle(n) * 2

    @pytest.mark.parametrize("n", [3, 5])
    def test_triangle_matches_operator(self, n):
        assert ct_vsastriangle(n) == vsast_pq_genfun_op(n - 1, 3)

    @pytest.mark.parametrize("n", [1, 3, 5])
    def test_odd_matches_enumeration(self, n):
        assert ct_vsast_pq_odd(n) == genfun_from_list(enumerate_vsast(n, 1))
        assert ct_vsastriangle(n) == genfun_from_list(enumerate_as_triangles(n, symmetric=True))

    def test_parameter_checks(self):
        with pytest.raises(InvalidObjectError):
            ct_vsast_pq(3, 3)
        with pytest.raises(InvalidObjectError):
            ct_vsast_pq(2, 2)
        with pytest.raises(InvalidObjectError):
            ct_vsast_pq_odd(4)
        with pytest.raises(InvalidObjectError):
            ct_vsast_pqc(4, 3, [-1, -2])


class TestSymmetrizer:
    def test_sym_and_asym(self):
        first = lambda x: x[0] * x[0] * x[1]
        point = [Fraction(2), Fraction(3)]
        assert symmetrize(first, 2)(point) == 12 + 18
        assert symmetrize(first, 2, SymmetrizeMode.ASYM)(point) == 12 - 18

    def test_asym_of_symmetric_vanishes(self):
        product = lambda x: x[0] * x[1] * x[2]
        assert symmetrize(product, 3, SymmetrizeMode.ASYM)([Fraction(1), Fraction(2), Fraction(5)]) == 0

    def test_pole(self):
        with pytest.raises(SingularPointError):
            symmetrize(lambda x: 1 / x[0], 2)([Fraction(0), Fraction(1)])

    def test_wrong_arity(self):
        with pytest.raises(ValueError):
            symmetrize(lambda x: x[0], 2)([Fraction(1)])

    @pytest.mark.parametrize("variant", list(QasymVariant))
    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_qasym_identities(self, m, variant):
        points = random_qasym_points(m, 12, seed=20240101 + m)
        report = verify_qasym(m, points, variant)
        assert not report.failures
        assert report.checked + len(report.skipped) == 12

    def test_points_are_reproducible(self):
        assert random_qasym_points(2, 5, seed=7) == random_qasym_points(2, 5, seed=7)


class TestStantonStembridge:
    @given(data=st.data())
    @settings(max_examples=20, deadline=None)
    def test_symmetrization_keeps_constant_term(self, data):
        variables = ("x1", "x2")
        poly = MultiPoly.constant(variables, 0)
        for e1 in range(3):
            for e2 in range(3):
                c = data.draw(st.integers(-4, 4))
                if c:
                    poly = poly + MultiPoly.variable(variables, "x1") ** e1 * MultiPoly.variable(variables, "x2") ** e2 * c
        offset = data.draw(st.integers(-2, 0))
        series = TruncSeries.from_poly(poly, variables, [3, 3])
        direct, symmetric = stanton_stembridge_check(series, (offset, offset))
        assert direct == symmetric

    def test_needs_symmetric_offset(self):
        series = TruncSeries.one(("x1", "x2"), (2, 2))
        with pytest.raises(ValueError):
            stanton_stembridge_check(series, (0, -1))

"""Операторы, DSL, суммирование и операторные формулы."""

from itertools import chain, combinations

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from algebra import Coefficient, MultiPoly, binomial_poly
from objects import (
    HalvedShape,
    InvalidObjectError,
    enumerate_halved_patterns,
    enumerate_vsast,
    equal_bottom_pairs,
    genfun_from_list,
)
from operators import (
    Bd,
    Compose,
    Fd,
    Id,
    ParseError,
    Power,
    QE,
    QId,
    Qfd,
    ScalarMul,
    Shift,
    Sum,
    SumSpec,
    SumVariant,
    SymbolicCapError,
    admissible_c_vectors,
    apply_operator,
    check_app_sum_even,
    check_app_sum_odd,
    check_sum_op_alt,
    check_sum_op_normal,
    hmt_pq_genfun,
    hmt_pq_polynomial,
    natural_sorted,
    operator_variables,
    parse_operator_expr,
    parse_polynomial,
    q_sum,
    qhmt_genfun,
    qhmt_operand,
    qhmt_polynomial,
    qhtree_genfun,
    qhtree_polynomial,
    pq_formula_applies,
    summation_points,
    tokenize,
    vsast_admissible,
    vsast_pq_genfun_op,
    vsast_pqc_genfun_op,
    vsast_qc_genfun,
)
from tests.strategies import polynomials, strictly_increasing

Q = Coefficient.Q()
P = Coefficient.P()
K = ("k1", "k2")


def hmt_bruteforce(n, b, k, s=()):
    return genfun_from_list(enumerate_halved_patterns(n, b, k, s)).substitute(P=1)


def subsets(values):
    values = list(values)
    return chain.from_iterable(combinations(values, r) for r in range(len(values) + 1))


class TestParser:
    def test_atoms(self):
        assert parse_operator_expr("Id") == Id()
        assert parse_operator_expr("Fd_{k1}") == Fd("k1")
        assert parse_operator_expr("Qfd_k2") == Qfd("k2")
        assert parse_operator_expr("E_{k1}^-1") == Shift("k1", -1)
        assert parse_operator_expr("Q") == ScalarMul(Q)

    def test_composite(self):
        expr = parse_operator_expr("(-Qfd_{k1})^2 * (Id + Qfd_{k2})")
        assert expr == Compose((
            Power(Compose((ScalarMul(Coefficient.const(-1)), Qfd("k1"))), 2),
            Sum((Id(), Qfd("k2"))),
        ))
        assert operator_variables(expr) == {"k1", "k2"}

    def test_scalars_fold(self):
        assert parse_operator_expr("2*Q - 1") == ScalarMul(Q * 2 - 1)
        assert parse_operator_expr("-Q") == ScalarMul(-Q)
        assert parse_operator_expr("Q^-1") == ScalarMul(Q ** -1)

    def test_difference_matches_fd(self):
        expr = parse_operator_expr("E_{k1} - Id")
        p = parse_polynomial("k1^3 + Q*k1*k2 - 4", K)
        assert apply_operator(expr, p) == apply_operator(Fd("k1"), p)

    @pytest.mark.parametrize("text", [
        "Fd_{k1}^-1",
        "(Q + 1)^-1",
        "Foo_{k1}",
        "Fd_{k1",
        "Fd_{k1} $ Id",
        "Id Id",
        "Fd_",
        "",
    ])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_operator_expr(text)

    def test_error_position(self):
        with pytest.raises(ParseError) as info:
            parse_operator_expr("Id + #")
        assert info.value.position == 5

    def test_tokenize(self):
        kinds = [t.kind for t in tokenize("Qfd_{k1}^2")]
        assert kinds == ["name", "op", "op", "name", "op", "op", "int", "end"]

    def test_polynomial(self):
        p = parse_polynomial("(k1 - k2)^2/2 + P")
        assert p.variables == ("k1", "k2")
        assert p.evaluate({"k1": 3, "k2": 1}) == P + 2

    def test_polynomial_unknown_variable(self):
        with pytest.raises(ParseError):
            parse_polynomial("k1 + x", K)

    def test_natural_sorted(self):
        assert natural_sorted(["k10", "k2", "b", "k1", "k2"]) == ["b", "k1", "k2", "k10"]


class TestOperatorIdentities:
    @given(polynomials(K))
    @settings(max_examples=40, deadline=None)
    def test_fd_is_shift_minus_id(self, p):
        assert apply_operator(Fd("k1"), p) == apply_operator(Shift("k1"), p) - p

    @given(polynomials(K))
    @settings(max_examples=40, deadline=None)
    def test_bd_after_shift(self, p):
        assert apply_operator(Compose((Bd("k1"), Shift("k1"))), p) == apply_operator(Fd("k1"), p)

    @given(polynomials(K))
    @settings(max_examples=40, deadline=None)
    def test_qid_inverts_qfd(self, p):
        assert apply_operator(Compose((QId("k2"), Qfd("k2"))), p) == apply_operator(Fd("k2"), p)

    @given(polynomials(K))
    @settings(max_examples=40, deadline=None)
    def test_qfd_through_bd(self, p):
        expr = Compose((ScalarMul(Q ** -1), Bd("k1"), Sum((Id(), Qfd("k1")))))
        assert apply_operator(expr, p) == apply_operator(Qfd("k1"), p)

    @given(polynomials(K))
    @settings(max_examples=40, deadline=None)
    def test_distinct_variables_commute(self, p):
        left = Compose((Qfd("k1"), QE("k2")))
        right = Compose((QE("k2"), Qfd("k1")))
        assert apply_operator(left, p) == apply_operator(right, p)

    def test_qfd_small_inputs(self):
        assert apply_operator(Qfd("k1"), MultiPoly.constant(K, 7)).is_zero()
        assert apply_operator(Qfd("k1"), MultiPoly.variable(K, "k1")) == MultiPoly.constant(K, Q ** -1)

    def test_qfd_at_q_one_is_fd(self):
        p = parse_polynomial("k1^4 - 3*k1^2*k2", K)
        qfd = apply_operator(Qfd("k1"), p)
        fd = apply_operator(Fd("k1"), p)
        for point in ({"k1": 0, "k2": 1}, {"k1": -2, "k2": 5}):
            assert qfd.evaluate(point).substitute(Q=1) == fd.evaluate(point)

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_fd_lowers_binomial(self, m):
        x = MultiPoly.variable(("k1",), "k1")
        assert apply_operator(Fd("k1"), binomial_poly(x, m)) == binomial_poly(x, m - 1)

    def test_power_rejects_negative(self):
        with pytest.raises(ValueError):
            Power(Fd("k1"), -1)


class TestSummation:
    def test_points(self):
        points = list(summation_points(SumSpec(k=[0, 2])))
        assert points == [((0,), 0), ((1,), 1), ((2,), 0)]

    def test_strictly_increasing_points(self):
        points = [p for p, _ in summation_points(SumSpec(k=[0, 1, 1]))]
        assert points == [(0, 1)]

    def test_q_sum_constant(self):
        f = MultiPoly.constant(("l1",), 1)
        assert q_sum(SumSpec(k=[0, 2]), f) == Q + 2
        assert q_sum(SumSpec(k=[0, 2], variant=SumVariant.ALTERNATIVE), f) == Q * 2 + 1

    def test_q_sum_arity(self):
        with pytest.raises(ValueError):
            q_sum(SumSpec(k=[0, 1, 2]), MultiPoly.constant(("l1",), 1))

    def test_bounds_must_increase(self):
        with pytest.raises(ValueError):
            SumSpec(k=[2, 1])

    @pytest.mark.parametrize("n,b,k", [(3, 2, [0, 2]), (3, 3, [-1, 1]), (5, 2, [0, 1, 2])])
    def test_odd_row_recursion(self, n, b, k):
        assert q_sum(SumSpec(k=k), qhmt_polynomial(n - 1, b)) == hmt_bruteforce(n, b, k)

    @pytest.mark.parametrize("n,b,k", [(2, 3, [1]), (4, 2, [0, 1]), (4, 3, [-1, 2])])
    def test_even_row_recursion(self, n, b, k):
        spec = SumSpec(k=k + [b], variant=SumVariant.ALTERNATIVE)
        assert q_sum(spec, qhmt_polynomial(n - 1, b)) == hmt_bruteforce(n, b, k)


class TestHMT:
    def test_small_operands(self):
        assert qhmt_operand(1) == MultiPoly.constant(("k1", "b"), 1)
        assert qhmt_operand(2) == parse_polynomial("b + 1 - k1", ("k1", "b"))

    @pytest.mark.parametrize("n,b,k", [(1, 0, [0]), (1, 4, [-2])])
    def test_order_one(self, n, b, k):
        assert qhmt_genfun(n, b, k) == Coefficient.one()

    @given(st.integers(-4, 4), st.integers(0, 5))
    @settings(max_examples=30, deadline=None)
    def test_order_two(self, k1, gap):
        assert qhmt_genfun(2, k1 + gap, [k1]) == Q * gap + 1

    def test_count_at_q_one(self):
        assert qhmt_genfun(4, 2, [1, 2]).substitute(Q=1) == Coefficient.const(3)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_against_enumeration(self, n):
        m = (n + 1) // 2
        for k in combinations(range(-1, 3), m):
            assert qhmt_genfun(n, 2, k) == hmt_bruteforce(n, 2, k), k

    def test_symbolic_b(self):
        symbolic = qhmt_polynomial(3)
        assert symbolic.evaluate({"k1": 0, "k2": 2, "b": 3}) == qhmt_genfun(3, 3, [0, 2])

    @pytest.mark.parametrize("n,b,k", [(3, 1, [2, 0]), (3, 1, [0, 2]), (2, 0, [0, 1])])
    def test_invalid_bottom(self, n, b, k):
        with pytest.raises(InvalidObjectError):
            qhmt_genfun(n, b, k)

    def test_symbolic_cap(self, symbolic_cap):
        assert qhmt_genfun(2, 1, [0]) == Q + 1
        with pytest.raises(SymbolicCapError):
            qhmt_genfun(3, 2, [0, 2])


class TestTrees:
    def test_zero_truncation_is_hmt(self):
        assert qhtree_genfun(5, 2, [0, 1, 2], [0, 0, 0]) == qhmt_genfun(5, 2, [0, 1, 2])

    @pytest.mark.parametrize("n,b,k,s", [
        (3, 2, [0, 1], [1, 0]),
        (3, 1, [-1, 0], [1, 0]),
        (5, 2, [-3, -2, -1], [2, 1, 0]),
        (5, -1, [-3, -2, -1], [2, 1, 0]),
        (5, 1, [-2, 0, 1], [1, 0, 0]),
    ])
    def test_against_enumeration(self, n, b, k, s):
        assert qhtree_genfun(n, b, k, s) == hmt_bruteforce(n, b, k, s)

    @pytest.mark.parametrize("n,b,k,s", [
        (2, 3, [1], []),
        (3, 2, [0, 2], []),
        (4, 2, [0, 1], []),
        (5, 2, [-3, -2, -1], [2, 1, 0]),
    ])
    def test_pq_against_enumeration(self, n, b, k, s):
        patterns = enumerate_halved_patterns(n, b, k, s)
        m = (n + 1) // 2
        for l_eq in subsets(range(1, m + 1)):
            chosen = [(p, w) for p, w in patterns if equal_bottom_pairs(p) == set(l_eq)]
            expected = genfun_from_list(chosen).substitute(P=1)
            assert hmt_pq_genfun(n, b, k, s, l_eq) == expected, l_eq

    def test_pq_telescopes(self):
        total = sum(
            (hmt_pq_genfun(4, 3, [0, 2], [], l_eq) for l_eq in subsets([1, 2])),
            Coefficient.zero(),
        )
        assert total == qhtree_genfun(4, 3, [0, 2], [])

    def test_pq_order_two(self):
        assert hmt_pq_genfun(2, 4, [1], [], [1]) == Coefficient.one()
        assert hmt_pq_genfun(2, 4, [1], [], []) == Q * 3

    def test_pq_rejects_bad_set(self):
        with pytest.raises(InvalidObjectError):
            hmt_pq_genfun(3, 2, [0, 2], [], [3])

    @pytest.mark.parametrize("n,b,k,l_eq,expected", [
        (4, 2, [0, 1], [], Q * 2 + Q**2),
        (4, 2, [0, 1], [2], Coefficient.zero()),
        (5, 2, [0, 1, 2], [], Q + 2),
    ])
    def test_pq_without_leading_pairs(self, n, b, k, l_eq, expected):
        """Треугольник без равенства в первой диагонали: произведение неприменимо, сумма по строкам"""
        assert hmt_pq_genfun(n, b, k, [], l_eq) == expected

    @pytest.mark.parametrize("n,b,k", [(4, 3, [-1, 2]), (5, 2, [0, 1, 2]), (5, 1, [-2, 0, 1])])
    def test_pq_triangles_all_sets(self, n, b, k):
        patterns = enumerate_halved_patterns(n, b, k)
        m = (n + 1) // 2
        for l_eq in subsets(range(1, m + 1)):
            chosen = [(p, w) for p, w in patterns if equal_bottom_pairs(p) == set(l_eq)]
            assert hmt_pq_genfun(n, b, k, [], l_eq) == genfun_from_list(chosen).substitute(P=1), l_eq

    @given(k=strictly_increasing(2, -2, 2), extra=st.integers(0, 2))
    @settings(max_examples=15, deadline=None)
    def test_pq_sets_partition_triangles(self, k, extra):
        """Сумма по всем L_eq равна производящей функции всех треугольников"""
        b = k[-1] + extra
        memo: dict = {}
        total = sum(
            (hmt_pq_genfun(4, b, k, [], l_eq, memo) for l_eq in subsets([1, 2])),
            Coefficient.zero(),
        )
        assert total == qhmt_genfun(4, b, k, memo)

    def test_pq_formula_domain(self):
        assert pq_formula_applies(HalvedShape(n=4), [1])
        assert not pq_formula_applies(HalvedShape(n=4), [])
        assert pq_formula_applies(HalvedShape(n=5, s=[2, 1, 0]), [])
        assert not pq_formula_applies(HalvedShape(n=5, s=[1, 1, 0]), [2])

    def test_pq_truncated_outside_domain(self):
        """Усечённое дерево с s_1 = s_2 и 1 не в L_eq: ошибка, а не неверный ответ"""
        with pytest.raises(InvalidObjectError, match="неприменимо"):
            hmt_pq_genfun(5, 2, [-1, 0, 2], [1, 1, 0], [])

    def test_pq_polynomial_refuses_outside_domain(self):
        with pytest.raises(InvalidObjectError):
            hmt_pq_polynomial(4, [], [], 2)
        assert hmt_pq_polynomial(4, [], [1], 2).evaluate({"k1": 0, "k2": 1}) == hmt_pq_genfun(4, 2, [0, 1], [], [1])

    def test_pq_triangle_checks_bottom(self):
        with pytest.raises(InvalidObjectError):
            hmt_pq_genfun(4, 2, [1, 0], [], [1])
        with pytest.raises(InvalidObjectError):
            hmt_pq_genfun(4, 2, [0, 3], [], [])


class TestMemo:
    def test_no_module_level_cache(self):
        assert not hasattr(qhmt_polynomial, "cache_info")
        assert not hasattr(qhtree_polynomial, "cache_info")

    def test_shared_memo_reused(self):
        memo: dict = {}
        first = qhtree_polynomial(5, [1, 0, 0], 2, memo)
        assert ("hmt", 5, 2) in memo
        assert ("tree", 5, 2, (1, 0, 0)) in memo
        assert qhtree_polynomial(5, [1, 0, 0], 2, memo) is first

    def test_memo_is_per_call_by_default(self):
        assert qhmt_polynomial(3, 2) is not qhmt_polynomial(3, 2)
        assert qhmt_polynomial(3, 2) == qhmt_polynomial(3, 2)

    def test_memo_keeps_values(self):
        memo: dict = {}
        for k in ([0, 1], [0, 2], [1, 2]):
            assert qhmt_genfun(4, 2, k, memo) == qhmt_genfun(4, 2, k), k
        assert list(memo) == [("hmt", 4, 2)]


class TestVsast:
    def test_admissible(self):
        assert vsast_admissible(4, (-2, -1))
        assert not vsast_admissible(4, (-4, -3))
        assert admissible_c_vectors(4) == [(-3, -1), (-2, -1)]

    def test_qc_examples(self):
        assert vsast_qc_genfun(2, 3, [-1], []) == Coefficient.one()
        assert vsast_qc_genfun(2, 3, [-1], [-1]).is_zero()

    def test_qc_rejects(self):
        with pytest.raises(InvalidObjectError):
            vsast_qc_genfun(2, 3, [-1], [-2])
        with pytest.raises(InvalidObjectError):
            vsast_qc_genfun(3, 3, [-1], [])
        with pytest.raises(InvalidObjectError):
            vsast_qc_genfun(2, 4, [-1], [])

    def test_inadmissible_c_is_zero(self):
        assert vsast_pqc_genfun_op(4, 3, [-4, -1]).is_zero()

    def test_pqc_example(self):
        assert vsast_pqc_genfun_op(2, 3, [-1]) == Coefficient.one()

    @pytest.mark.parametrize("n,l", [(2, 3), (2, 5), (4, 3), (4, 5)])
    def test_pqc_splits_into_qc(self, n, l):
        for c in admissible_c_vectors(n):
            parts = sum(
                (vsast_qc_genfun(n, l, c, c10) * Coefficient.P(len(c10)) for c10 in subsets(c)),
                Coefficient.zero(),
            )
            assert vsast_pqc_genfun_op(n, l, c) == parts, c

    @pytest.mark.parametrize("n,l", [(2, 3), (2, 5), (4, 3), (4, 5)])
    def test_pq_against_enumeration(self, n, l):
        expected = genfun_from_list(enumerate_vsast(n, l))
        assert vsast_pq_genfun_op(n, l) == expected


class TestLemmas:
    @pytest.mark.parametrize("check", [
        check_sum_op_normal,
        check_sum_op_alt,
        check_app_sum_odd,
        check_app_sum_even,
    ])
    @given(data=st.data())
    @settings(max_examples=8, deadline=None)
    def test_sides_agree(self, check, data):
        n = data.draw(st.integers(1, 3))
        b = data.draw(st.integers(0, 3))
        k = data.draw(strictly_increasing(n, -2, b))
        lhs, rhs = check(n, k, b)
        assert lhs == rhs

    def test_rejects_non_increasing(self):
        with pytest.raises(InvalidObjectError):
            check_sum_op_normal(2, [1, 1], 2)
        with pytest.raises(InvalidObjectError):
            check_sum_op_alt(2, [0, 3], 2)

"""Трапеции, половинные деревья, их веса и биекции."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from algebra import Coefficient
from objects import (
    ASTrapezoid,
    ColumnTag,
    HalvedPattern,
    HalvedShape,
    InvalidObjectError,
    PatternMode,
    ResourceBoundError,
    WeightMonomial,
    central_column,
    check_pattern,
    classify_columns,
    delete_bottom_row_n1,
    enumerate_as_triangles,
    enumerate_astrapezoids,
    enumerate_halved_patterns,
    enumerate_vsasm,
    enumerate_vsast,
    equal_bottom_pairs,
    genfun_from_list,
    is_vertically_symmetric,
    pattern_q_weight_new_entries,
    pattern_weight,
    tree_to_vsast,
    validate_trapezoid,
    vsast_to_tree,
    vsast_weight,
    vsasm_to_hmt,
)

Q = Coefficient.Q()
P = Coefficient.P()

# Симметричная (6,9)-трапеция с c = (-3,-2,-1) и весом P*Q^2
TRAPEZOID_6_9 = ASTrapezoid(n=6, l=9, rows=[
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, -1, 1, -1, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, -1, 0, 0, 1, 0, 0, 0],
    [1, 0, -1, 0, 0, 1, 0, 0, -1, 0, 1],
    [1, 0, 0, 0, -1, 0, 0, 0, 1],
])

# Соответствующее половинное (2,1,0)-дерево порядка 5, сверху вниз: 2 / -3 / -3,0 / -2 / -1
TREE_5 = HalvedPattern(
    n=5,
    s=[2, 1, 0],
    rows_bottom_up=[[None, None, -1], [None, -2], [-3, 0], [-3], [2]],
    b=2,
)

# VSASM 5×5 и его половинный монотонный треугольник 1 / 1 / 1,2 / 1,2
VSASM_5 = [
    [0, 0, 1, 0, 0],
    [1, 0, -1, 0, 1],
    [0, 0, 1, 0, 0],
    [0, 1, -1, 1, 0],
    [0, 0, 1, 0, 0],
]


# === Трапеции ===

class TestTrapezoids:
    def test_table_of_2_5_trapezoids(self):
        trapezoids = enumerate_astrapezoids(2, 5)
        assert len(trapezoids) == 9
        assert len({t.key() for t in trapezoids}) == 9

    @pytest.mark.parametrize("n, l, count", [(1, 3, 2), (1, 1, 2), (2, 3, None), (3, 1, None)])
    def test_every_enumerated_trapezoid_is_valid(self, n, l, count):
        trapezoids = enumerate_astrapezoids(n, l)
        if count is not None:
            assert len(trapezoids) == count
        for t in trapezoids:
            assert validate_trapezoid(n, l, t.rows) == []

    def test_validator_rejects_bad_arrays(self):
        assert validate_trapezoid(1, 3, [[0, 1, 0]])  # центральный столбец
        assert validate_trapezoid(1, 3, [[1, 0, 1]])  # сумма строки
        assert validate_trapezoid(2, 1, [[-1, 1, 1], [1]])  # верхний элемент столбца

    def test_model_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            ASTrapezoid(n=2, l=1, rows=[[0, 1, 0], [1, 0]])
        with pytest.raises(ValueError):
            ASTrapezoid(n=1, l=1, rows=[[2]])

    def test_invalid_parameters(self):
        with pytest.raises(InvalidObjectError):
            enumerate_astrapezoids(0, 3)
        with pytest.raises(InvalidObjectError):
            enumerate_vsast(2, 0)

    def test_node_budget(self, tiny_budget):
        with pytest.raises(ResourceBoundError):
            enumerate_astrapezoids(3, 3)


class TestSymmetry:
    def test_order_six_instance(self):
        assert validate_trapezoid(6, 9, TRAPEZOID_6_9.rows) == []
        assert is_vertically_symmetric(TRAPEZOID_6_9)
        assert central_column(TRAPEZOID_6_9) == [1, -1, 1, -1, 1, -1]

    def test_order_six_columns(self):
        columns = classify_columns(TRAPEZOID_6_9)
        assert columns.c == [-3, -2, -1]
        counts = columns.counts()
        assert counts[ColumnTag.ONE0] == 2
        assert counts[ColumnTag.ONE1] == 4

    def test_figure_weight(self):
        assert vsast_weight(TRAPEZOID_6_9) == WeightMonomial(q_exp=2, p_exp=1)

    def test_single_row_center(self):
        assert is_vertically_symmetric(ASTrapezoid(n=1, l=1, rows=[[1]]))
        assert vsast_weight(ASTrapezoid(n=1, l=1, rows=[[0]])) == WeightMonomial()

    def test_non_symmetric(self):
        t = ASTrapezoid(n=1, l=3, rows=[[1, 0, 0]])
        assert not is_vertically_symmetric(t)
        with pytest.raises(InvalidObjectError):
            vsast_weight(t)
        assert not all(is_vertically_symmetric(t) for t in enumerate_astrapezoids(2, 5))

    @pytest.mark.parametrize("n, l", [(2, 5), (2, 3)])
    def test_unique_small_vsast(self, n, l):
        items = enumerate_vsast(n, l)
        assert len(items) == 1
        symmetric = [t for t in enumerate_astrapezoids(n, l) if is_vertically_symmetric(t)]
        assert [t.key() for t, _ in items] == [t.key() for t in symmetric]

    def test_unique_2_3_weight(self):
        [(_, weight)] = enumerate_vsast(2, 3)
        assert weight == WeightMonomial(q_exp=0, p_exp=0)

    @pytest.mark.parametrize("n, l", [(2, 3), (2, 5), (4, 3), (4, 5)])
    def test_half_of_one_columns_on_the_left(self, n, l):
        for t, _ in enumerate_vsast(n, l):
            assert len(classify_columns(t).c) == n // 2

    @pytest.mark.parametrize("n, l", [(2, 3), (3, 1), (4, 3)])
    def test_specialization_is_cardinality(self, n, l):
        items = enumerate_vsast(n, l)
        assert genfun_from_list(items).evaluate(1, 1) == len(items)

    @pytest.mark.slow
    def test_order_six_instance_is_enumerated(self):
        keys = {t.key(): w for t, w in enumerate_vsast(6, 9)}
        assert keys[TRAPEZOID_6_9.key()] == WeightMonomial(q_exp=2, p_exp=1)


class TestBottomRow:
    def test_odd_order_splits_into_two_copies(self):
        odd = enumerate_vsast(3, 1)
        assert len(odd) == 2 * len(enumerate_vsast(2, 3))
        targets = {t.key() for t, _ in enumerate_vsast(2, 3)}
        for t, _ in odd:
            reduced = delete_bottom_row_n1(t)
            assert reduced.key() in targets

    def test_single_entry(self):
        assert len(enumerate_vsast(1, 1)) == 2

    def test_rejects_other_shapes(self):
        with pytest.raises(InvalidObjectError):
            delete_bottom_row_n1(TRAPEZOID_6_9)

    def test_rejects_asymmetric(self):
        t = ASTrapezoid(n=3, l=1, rows=[[1, 0, 0, 0, 0], [0, 0, 0], [0]])
        with pytest.raises(InvalidObjectError, match="симметрична"):
            delete_bottom_row_n1(t)

    def test_rejects_even_order(self):
        t = ASTrapezoid(n=2, l=1, rows=[[0, 1, 0], [0]])
        with pytest.raises(InvalidObjectError, match="чётный"):
            delete_bottom_row_n1(t)

    def test_rejects_invalid_rows(self):
        """Симметрична и нечётного порядка, но столбцы не чередуются"""
        t = ASTrapezoid(n=3, l=1, rows=[[0, 0, 1, 0, 0], [0, 1, 0], [1]])
        with pytest.raises(InvalidObjectError, match=r"Не \(n,1\)"):
            delete_bottom_row_n1(t)

    def test_symmetric_triangles(self):
        triangles = enumerate_as_triangles(3, symmetric=True)
        assert len(triangles) == len(enumerate_vsast(2, 3))
        assert all(t.rows[-1] == [1] for t, _ in triangles)
        assert enumerate_as_triangles(1, symmetric=True)[0][1] == WeightMonomial()


# === Половинные схемы ===

class TestHalvedPatterns:
    def test_order_one(self):
        [(pattern, weight)] = enumerate_halved_patterns(1, 0, [0])
        assert pattern.rows_bottom_up == [[0]]
        assert weight == WeightMonomial()

    @given(st.integers(-3, 3), st.integers(0, 4))
    @settings(max_examples=20)
    def test_order_two_generating_function(self, k1, gap):
        b = k1 + gap
        items = enumerate_halved_patterns(2, b, [k1])
        assert genfun_from_list(items).substitute(P=1) == Q * gap + 1
        # верхний элемент, равный k1, даёт равную нижнюю пару
        assert genfun_from_list(items) == Q * gap + P

    def test_figure_tree(self):
        assert check_pattern(TREE_5) == []
        assert TREE_5.bottom_row == [-3, -2, -1]
        assert pattern_weight(TREE_5) == WeightMonomial(q_exp=2, p_exp=1)
        assert equal_bottom_pairs(TREE_5) == {1}
        items = enumerate_halved_patterns(5, 2, [-3, -2, -1], [2, 1, 0])
        assert TREE_5 in [p for p, _ in items]

    @pytest.mark.parametrize("n, b, k", [(3, 2, [0, 2]), (4, 2, [0, 2]), (5, 3, [0, 1, 3])])
    def test_every_pattern_is_valid(self, n, b, k):
        for mode in PatternMode:
            for pattern, _ in enumerate_halved_patterns(n, b, k, mode=mode):
                assert check_pattern(pattern) == []
                assert pattern.bottom_row == k

    def test_weak_rows_contain_strict_rows(self):
        strict = enumerate_halved_patterns(4, 2, [0, 2])
        weak = enumerate_halved_patterns(4, 2, [0, 2], mode=PatternMode.WEAK_ROWS)
        assert len(weak) > len(strict)

    def test_bottom_row_must_increase(self):
        with pytest.raises(InvalidObjectError):
            enumerate_halved_patterns(3, 2, [1, 1])
        with pytest.raises(InvalidObjectError):
            enumerate_halved_patterns(3, 2, [0])
        # нестрогие строки допускают равные элементы
        assert enumerate_halved_patterns(3, 2, [1, 1], mode=PatternMode.WEAK_ROWS)

    @pytest.mark.parametrize("s", [[0, 1], [4, 0], [1, 0, 1], [-1]])
    def test_invalid_truncation(self, s):
        with pytest.raises(ValueError):
            HalvedShape(n=4, s=s)

    def test_shape_geometry(self):
        shape = HalvedShape(n=5, s=[2, 1])
        assert shape.full_s == [2, 1, 0]
        assert shape.is_present(3, 1) and not shape.is_present(4, 1)
        assert shape.is_present(4, 2) and not shape.is_present(5, 2)
        assert shape.is_present(5, 3)

    def test_new_entries_weight(self):
        assert pattern_q_weight_new_entries(vsasm_to_hmt(VSASM_5)) == 2


# === Биекции ===

class TestBijections:
    def test_figure_pairing(self):
        tree = vsast_to_tree(TRAPEZOID_6_9)
        assert tree.s == [2, 1, 0]
        assert tree.rows_top_down() == TREE_5.rows_top_down()
        assert pattern_weight(tree) == vsast_weight(TRAPEZOID_6_9)
        assert tree_to_vsast(TREE_5, 9) == TRAPEZOID_6_9

    @pytest.mark.parametrize("n, l", [(2, 3), (4, 3), (4, 5)])
    def test_roundtrip_and_weights(self, n, l):
        for t, weight in enumerate_vsast(n, l):
            tree = vsast_to_tree(t)
            assert tree_to_vsast(tree, l) == t
            assert pattern_weight(tree) == weight
            assert tree.b == (l - 5) // 2

    def test_rejects_non_symmetric(self):
        with pytest.raises(InvalidObjectError):
            vsast_to_tree(ASTrapezoid(n=1, l=3, rows=[[1, 0, 0]]))

    def test_vsasm_figure(self):
        pattern = vsasm_to_hmt(VSASM_5)
        assert pattern.rows_top_down() == [[1], [1], [1, 2], [1, 2]]
        assert check_pattern(pattern) == []

    def test_vsasm_rejects_non_symmetric(self):
        with pytest.raises(InvalidObjectError):
            vsasm_to_hmt([[0, 1, 0], [1, 0, 0], [0, 0, 1]])

    @pytest.mark.parametrize("size, count", [(1, 1), (3, 1), (5, 3), (7, 26)])
    def test_vsasm_counts(self, size, count):
        matrices = enumerate_vsasm(size)
        assert len(matrices) == count
        if size > 1:
            half = (size - 1) // 2
            patterns = enumerate_halved_patterns(size - 1, half, list(range(1, half + 1)))
            assert len(patterns) == count
            assert {tuple(map(tuple, vsasm_to_hmt(m).rows_bottom_up)) for m in matrices} == {
                tuple(map(tuple, p.rows_bottom_up)) for p, _ in patterns
            }

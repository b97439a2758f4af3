"""
Objects module — трапеции, половинные треугольники и деревья, веса, биекции.
"""

from objects.models import (
    InvalidObjectError,
    WeightMonomial,
    ASTrapezoid,
    ColumnTag,
    ColumnClass,
    HalvedShape,
    PatternMode,
    HalvedPattern,
)
from objects.budget import ResourceBoundError, NodeBudget
from objects.trapezoids import (
    validate_trapezoid,
    enumerate_astrapezoids,
    is_vertically_symmetric,
    classify_columns,
    central_column,
    vsast_weight,
    enumerate_vsast,
    delete_bottom_row_n1,
    enumerate_as_triangles,
)
from objects.patterns import (
    check_pattern,
    is_special,
    pattern_weight,
    equal_bottom_pairs,
    enumerate_halved_patterns,
    genfun_from_list,
    pattern_q_weight_new_entries,
)
from objects.bijections import (
    vsast_to_tree,
    tree_to_vsast,
    vsasm_to_hmt,
    enumerate_vsasm,
)

__all__ = [
    # Models
    "InvalidObjectError",
    "WeightMonomial",
    "ASTrapezoid",
    "ColumnTag",
    "ColumnClass",
    "HalvedShape",
    "PatternMode",
    "HalvedPattern",
    # Budget
    "ResourceBoundError",
    "NodeBudget",
    # Trapezoids
    "validate_trapezoid",
    "enumerate_astrapezoids",
    "is_vertically_symmetric",
    "classify_columns",
    "central_column",
    "vsast_weight",
    "enumerate_vsast",
    "delete_bottom_row_n1",
    "enumerate_as_triangles",
    # Patterns
    "check_pattern",
    "is_special",
    "pattern_weight",
    "equal_bottom_pairs",
    "enumerate_halved_patterns",
    "genfun_from_list",
    "pattern_q_weight_new_entries",
    # Bijections
    "vsast_to_tree",
    "tree_to_vsast",
    "vsasm_to_hmt",
    "enumerate_vsasm",
]

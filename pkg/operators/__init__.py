"""
Operators module — разностные операторы, DSL, операторные формулы и леммы.
"""

from operators.expr import (
    OperatorExpr,
    Id,
    Shift,
    Fd,
    Bd,
    Qfd,
    QId,
    QE,
    ScalarMul,
    Compose,
    Sum,
    Power,
    apply_operator,
    operator_variables,
    apply_factors,
    q_strict,
    t_operator,
    neg_qfd,
    pair_factors,
)
from operators.parser import ParseError, tokenize, parse_operator_expr, parse_polynomial, natural_sorted
from operators.summation import SumVariant, SumSpec, summation_points, q_sum
from operators.theorems import (
    SymbolicCapError,
    k_names,
    qhmt_operand,
    qhmt_operator,
    qhmt_polynomial,
    qhmt_genfun,
    qhtree_polynomial,
    qhtree_genfun,
    hmt_pq_polynomial,
    hmt_pq_genfun,
    pq_formula_applies,
    vsast_admissible,
    admissible_c_vectors,
    vsast_qc_genfun,
    vsast_pqc_genfun_op,
    vsast_pq_genfun_op,
)
from operators.lemmas import (
    binomial_det,
    check_sum_op_normal,
    check_sum_op_alt,
    check_app_sum_odd,
    check_app_sum_even,
)

__all__ = [
    # Expressions
    "OperatorExpr",
    "Id",
    "Shift",
    "Fd",
    "Bd",
    "Qfd",
    "QId",
    "QE",
    "ScalarMul",
    "Compose",
    "Sum",
    "Power",
    "apply_operator",
    "operator_variables",
    "apply_factors",
    "q_strict",
    "t_operator",
    "neg_qfd",
    "pair_factors",
    # Parser
    "ParseError",
    "tokenize",
    "parse_operator_expr",
    "parse_polynomial",
    "natural_sorted",
    # Summation
    "SumVariant",
    "SumSpec",
    "summation_points",
    "q_sum",
    # Theorems
    "SymbolicCapError",
    "k_names",
    "qhmt_operand",
    "qhmt_operator",
    "qhmt_polynomial",
    "qhmt_genfun",
    "qhtree_polynomial",
    "qhtree_genfun",
    "hmt_pq_polynomial",
    "hmt_pq_genfun",
    "pq_formula_applies",
    "vsast_admissible",
    "admissible_c_vectors",
    "vsast_qc_genfun",
    "vsast_pqc_genfun_op",
    "vsast_pq_genfun_op",
    # Lemmas
    "binomial_det",
    "check_sum_op_normal",
    "check_sum_op_alt",
    "check_app_sum_odd",
    "check_app_sum_even",
]

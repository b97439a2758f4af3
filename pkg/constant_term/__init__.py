"""
Constant term module — интегранты теорем о свободном члене, симметризатор.
"""

from constant_term.integrands import (
    CTFormula,
    ct_evaluate,
    x_names,
    ct_qhtree_formula,
    ct_qhtree,
    ct_vsast_pqc_formula,
    ct_vsast_pqc,
    ct_vsast_pq_formula,
    ct_vsast_pq,
    ct_vsast_pq_odd,
    ct_vsastriangle,
)
from constant_term.symmetrizer import (
    SingularPointError,
    SymmetrizeMode,
    QasymVariant,
    IdentityCheck,
    symmetrize,
    random_qasym_points,
    verify_qasym,
    stanton_stembridge_check,
)

__all__ = [
    # Integrands
    "CTFormula",
    "ct_evaluate",
    "x_names",
    "ct_qhtree_formula",
    "ct_qhtree",
    "ct_vsast_pqc_formula",
    "ct_vsast_pqc",
    "ct_vsast_pq_formula",
    "ct_vsast_pq",
    "ct_vsast_pq_odd",
    "ct_vsastriangle",
    # Symmetrizer
    "SingularPointError",
    "SymmetrizeMode",
    "QasymVariant",
    "IdentityCheck",
    "symmetrize",
    "random_qasym_points",
    "verify_qasym",
    "stanton_stembridge_check",
]

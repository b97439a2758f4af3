"""
Formulas module — определители, 2-перечисление, пути LGV, симплектические характеры.
"""

from formulas.determinants import (
    IdentityViolationError,
    rational_det,
    binomial,
    det_binom,
    hmt_product,
    hmt_det_closed,
)
from formulas.appendix import (
    ShiftRecord,
    ShiftReport,
    two_enumeration,
    q_weight_exponent_shift,
    corrected_exponent_shift,
    exponent_shift_report,
)
from formulas.paths import (
    LozengeRegion,
    lgv_endpoints,
    lgv_count,
    gt_pattern_paths,
    lozenge_region,
)
from formulas.symplectic import Partition, sp_all_ones

__all__ = [
    # Determinants
    "IdentityViolationError",
    "rational_det",
    "binomial",
    "det_binom",
    "hmt_product",
    "hmt_det_closed",
    # Appendix A
    "ShiftRecord",
    "ShiftReport",
    "two_enumeration",
    "q_weight_exponent_shift",
    "corrected_exponent_shift",
    "exponent_shift_report",
    # Appendix B
    "LozengeRegion",
    "lgv_endpoints",
    "lgv_count",
    "gt_pattern_paths",
    "lozenge_region",
    "Partition",
    "sp_all_ones",
]

"""
Algebra module — кольцо коэффициентов, многочлены, усечённые ряды.
"""

from algebra.coefficient import (
    Rational,
    Coefficient,
    NonUnitError,
    coeff_arith,
    coeff_div_q_power,
    rational_binomial,
)
from algebra.multipoly import (
    MultiPoly,
    UnknownVariableError,
    poly_shift,
    poly_eval,
    binomial_poly,
    poly_det,
)
from algebra.series import (
    TruncSeries,
    TruncationError,
    CapMismatchError,
    series_mul,
    constant_term_extract,
)
from algebra.laurent import (
    LaurentFactor,
    MonomialPower,
    BinomialPower,
    QLinearInverse,
    GeneralInverse,
    PolyFactor,
    series_expand,
)

__all__ = [
    # Coefficient
    "Rational",
    "Coefficient",
    "NonUnitError",
    "coeff_arith",
    "coeff_div_q_power",
    "rational_binomial",
    # MultiPoly
    "MultiPoly",
    "UnknownVariableError",
    "poly_shift",
    "poly_eval",
    "binomial_poly",
    "poly_det",
    # Series
    "TruncSeries",
    "TruncationError",
    "CapMismatchError",
    "series_mul",
    "constant_term_extract",
    # Laurent factors
    "LaurentFactor",
    "MonomialPower",
    "BinomialPower",
    "QLinearInverse",
    "GeneralInverse",
    "PolyFactor",
    "series_expand",
]

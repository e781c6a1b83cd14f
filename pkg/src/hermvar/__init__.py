"""Exact Hermite polynomials of variance nu, the coefficient triangle of the
linear ODEs satisfied by their generating function, and identity checks."""

from .coeffs import (
    CoeffTable,
    build_table_recurrence,
    closed_form_coefficient,
    emit_matrix,
    odd_gap_zero,
)
from .hermite import (
    HermiteKind,
    apply_appell_operator,
    convert_probabilists_to_physicists,
    hermite_physicists,
    hermite_probabilists,
    hermite_variance,
    identify_physicists_as_variance,
)
from .identities import VerificationReport, run_suite
from .poly import BiPoly, NuPoly, binomial, falling_factorial
from .series import TruncSeries, series_exp, series_from_argument

__version__ = "0.1.0"

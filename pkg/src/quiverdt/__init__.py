"""Exact quantized DT invariants of quivers, from wall-crossing and from the CoHa."""

from .dt import (DTResult, dt_invariants, dt_tilde, realized_slopes, semistable_series, series_a,
                 theta_independence_check, wallcross_check)
from .errors import (BoxMismatchError, BudgetError, ConsistencyError, DimensionError,
                     GenericityError, OrderError, QuiverDTError, RangeError, SymmetryError,
                     ZeroVectorError)
from .quiver import (Quiver, antisym_form, bipartite_symmetric_quiver, euler_form, hn_types,
                     is_mu_generic, kronecker_quiver, loop_quiver, slope, two_cycle_quiver)
from .ratfunc import HalfPowerRational, format_ratfunc
from .series import (TwistedSeries, adams, free_supercomm_series, ordered_product,
                     plethystic_exp, plethystic_log, twisted_mul)

__version__ = "0.1.0"

__all__ = [
    "BoxMismatchError", "BudgetError", "ConsistencyError", "DTResult", "DimensionError",
    "GenericityError", "HalfPowerRational", "OrderError", "Quiver", "QuiverDTError", "RangeError",
    "SymmetryError", "TwistedSeries", "ZeroVectorError", "adams", "antisym_form",
    "bipartite_symmetric_quiver", "dt_invariants", "dt_tilde", "euler_form", "format_ratfunc",
    "free_supercomm_series", "hn_types", "is_mu_generic", "kronecker_quiver", "loop_quiver",
    "ordered_product", "plethystic_exp", "plethystic_log", "realized_slopes", "semistable_series",
    "series_a", "slope", "theta_independence_check", "twisted_mul", "two_cycle_quiver",
    "wallcross_check",
]

"""Recurrences for Chebyshev coefficients of D-finite functions via Ore polynomial fractions."""

from .chebrec import (
    ALGORITHMS,
    Algorithm,
    InternalConsistencyError,
    RecurrenceResult,
    dac,
    fast_mul_by_I_power,
    i_power_closed_form,
    lewanowicz,
    paszkowski,
    rebillard,
    reduce_order,
    run_algorithm,
)
from .field import RatFunc, RatPoly, ZeroDivisorError, counting
from .fraction import RecFrac, frac_add, frac_equiv, frac_mul, frac_reduce
from .ore import DiffOp, OreError, RecOp, gcld, gcrd, lclm, lcrm, rec_mul
from .parsing import ParseError, parse_operator
from .series import (
    CATALOG,
    cheb_coeffs,
    solve_forward,
    truncated_eval,
    verify_annihilation,
)

__version__ = "0.1.0"

"""Exact compositae of ordinary generating functions and central-coefficient transforms."""

from .catalog import (
    BUILTINS,
    BuiltinError,
    BuiltinSpec,
    binom,
    builtin_composita,
    builtin_series,
    catalan_number,
    engine_composita,
    stirling1,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
    triangle_series,
)
from .central import (
    CentralError,
    ForwardResult,
    InverseResult,
    central_forward,
    central_inverse,
    solve_functional_equation,
    verify_functional_equation,
)
from .engine import (
    Composita,
    CompositaError,
    central_diagonal,
    compose_compositae,
    composita_of,
    first_column,
    inverse_composita,
    reciprocal_composita,
    reciprocal_composita_lemma,
    reciprocal_composita_series,
    scale_composita,
)
from .series import (
    Series,
    SeriesError,
    add,
    compose,
    derivative,
    integrate0,
    make_series,
    mul,
    pow_trunc,
    reciprocal,
    revert,
    scalar_mul,
    sub,
)

__version__ = "0.1.0"

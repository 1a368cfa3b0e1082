"""Forward and inverse central-coefficient transforms.

Forward: given ``H`` with ``h(0) != 0``, the triangle of ``x H(x)`` has
central coefficients ``T(2n-1, n)``, and their generating function is the
derivative of the solution ``A`` of ``A = x H(A)``.

Inverse: given those central coefficients ``F``, recover the unique ``H``
by integrating ``F``, inverting the resulting series through compositae,
and taking a reciprocal.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .engine import (
    Composita,
    composita_of,
    first_column,
    inverse_composita,
    lemma_source_order,
    reciprocal_composita,
    reciprocal_composita_series,
)
from .series import (
    Series,
    compose,
    derivative,
    integrate0,
    make_series,
    shift_up,
    sub,
)

__all__ = [
    "CentralError",
    "ForwardResult",
    "InverseResult",
    "solve_functional_equation",
    "central_forward",
    "central_inverse",
    "verify_functional_equation",
]

log = logging.getLogger(__name__)


class CentralError(ValueError):
    """Raised when a central transform's precondition does not hold."""


@dataclass(frozen=True)
class ForwardResult:
    triangle: Composita
    a_series: Series
    central_gf: Series


@dataclass(frozen=True)
class InverseResult:
    h_series: Series
    triangle: Composita
    a_series: Series


def _require_terms(s: Series, count: int, what: str) -> None:
    if s.order < count - 1:
        raise CentralError(
            f"{what} needs coefficients up to x^{count - 1}, got order {s.order}"
        )


def _triangle_of_h(h: Series, rows: int) -> Composita:
    # rows of (x h)^k only read h(0 .. rows-1), so zero-padding is harmless
    return composita_of(shift_up(h.padded(rows - 1)), rows)


def solve_functional_equation(h: Series, n_target: int) -> Series:
    """Solution ``A`` of ``A(x) = x h(A(x))`` modulo ``x^(n_target+1)``.

    By Lagrange inversion ``a(n) = G(2n-1, n) / n`` where ``G`` is the
    triangle of ``x h(x)``.
    """
    if n_target < 1:
        raise CentralError("n_target must be >= 1")
    if h[0] == 0:
        raise CentralError("Lagrange inversion requires h(0)≠0")
    _require_terms(h, n_target, "solving A = x h(A)")
    g = _triangle_of_h(h, 2 * n_target - 1)
    return _a_from_triangle(g, n_target)


def _a_from_triangle(g: Composita, n_target: int) -> Series:
    coeffs = [Fraction(0)] + [
        g.entry(2 * n - 1, n) / n for n in range(1, n_target + 1)
    ]
    return make_series(coeffs, n_target)


def central_forward(h: Series, n_target: int) -> ForwardResult:
    """Central coefficients of the triangle of ``x h(x)`` and their generating function.

    The returned ``central_gf`` holds ``T(2m+1, m+1)`` at ``x^m`` for
    ``0 <= m < n_target`` and equals the derivative of ``a_series``.
    The triangle has ``2*n_target - 1`` rows; ``h`` is read as a polynomial
    past its order, so pass ``2*n_target - 2`` terms if every row (not only
    the central entries) should be exact for the true series.
    """
    if n_target < 1:
        raise CentralError("n_target must be >= 1")
    if h[0] == 0:
        raise CentralError("Lagrange inversion requires h(0)≠0")
    _require_terms(h, n_target, "the forward transform")
    triangle = _triangle_of_h(h, 2 * n_target - 1)
    a = _a_from_triangle(triangle, n_target)
    return ForwardResult(triangle=triangle, a_series=a, central_gf=derivative(a))


def central_inverse(
    f: Series, n_target: int, method: str = "series", check: bool = False
) -> InverseResult:
    """Unique ``H`` whose triangle has central coefficients ``f``.

    Pipeline, for a triangle of ``n_target`` rows:

    1. ``A = integral of f`` with zero constant term;
    2. the composita of ``A``;
    3. its reciprocal composita (the composita of ``x^2 / A``);
    4. the composita of the compositional inverse of ``A``, read off as
       ``(k/n) R(2n-k, n)``;
    5. the reciprocal composita of that, which is the wanted triangle;
    6. ``H`` is its first column.

    ``method="series"`` does the reciprocal steps by inverting series;
    ``method="lemma"`` uses the closed-form double sum on triangles, which
    needs deeper source triangles.  A leading coefficient ``f(0) != 1`` is
    handled by the ``c^k`` scaling law inside the reciprocal steps.  With
    ``check=True`` the result is pushed back through
    :func:`central_forward` and compared with ``f``.
    """
    if n_target < 1:
        raise CentralError("n_target must be >= 1")
    if f[0] == 0:
        raise CentralError("the inverse transform requires F(0)≠0")
    _require_terms(f, n_target, "the inverse transform")
    f = f.truncate(n_target - 1)
    a_series = integrate0(f)

    if method == "series":
        inv_rows = n_target
        a_rows = 2 * inv_rows - 1
    elif method == "lemma":
        inv_rows = lemma_source_order(n_target)
        a_rows = lemma_source_order(2 * inv_rows - 1)
    else:
        raise ValueError(f"unknown method {method!r}")

    # only A mod x^(n_target+1) influences the first n_target rows of the
    # inverse composita, so the padding below never leaks into the result
    a_tri = composita_of(a_series.padded(a_rows), a_rows)
    a_inv = inverse_composita(a_tri, inv_rows, method=method)

    if method == "series":
        w_over_t = first_column(a_inv)  # A^-1(t)/t = 1/H
        triangle = reciprocal_composita_series(w_over_t.truncate(n_target - 1), n_target)
    else:
        triangle = reciprocal_composita(a_inv, n_target)

    h_series = first_column(triangle)
    log.debug("central_inverse(%s rows, %s): h = %s", n_target, method, h_series)

    if check:
        back = central_forward(h_series, n_target).central_gf
        if back != f:
            raise CentralError(
                f"round trip failed: forward transform gives {back}, expected {f}"
            )
    return InverseResult(h_series=h_series, triangle=triangle, a_series=a_series)


def verify_functional_equation(a: Series, h: Series) -> tuple[bool, Series]:
    """Residual ``a - x h(a)`` and whether it vanishes to the available order."""
    if a[0] != 0:
        raise CentralError("verifying A = x h(A) needs a(0) = 0")
    order = min(a.order, h.order + 1)
    a = a.truncate(order)
    if order == 0:
        return True, a
    h_of_a = compose(h.padded(order), a)
    residual = sub(a, shift_up(h_of_a).truncate(order))
    return residual.is_zero(), residual


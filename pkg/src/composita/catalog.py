"""Named generating functions and their closed-form compositae.

Every builtin has a *kind*:

``"g"``
    the series itself has zero constant term and its triangle is ``g(x)^k``;
``"h"``
    the series has a nonzero constant term and its triangle is ``(x h(x))^k``.

The closed forms are tabulated directly from their formulas and never go
through :func:`composita.engine.composita_of`, so they serve as an
independent check of the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from .engine import Composita, composita_of
from .series import (
    Series,
    make_series,
    mul,
    reciprocal,
    shift_up,
    to_rational,
)

__all__ = [
    "BuiltinSpec",
    "BuiltinError",
    "Builtin",
    "BUILTINS",
    "binom",
    "stirling1",
    "stirling1_signed",
    "stirling1_unsigned",
    "stirling2",
    "catalan_number",
    "builtin_series",
    "builtin_composita",
    "engine_composita",
    "triangle_series",
]


class BuiltinError(ValueError):
    """Unknown builtin name or wrong number of parameters."""


def binom(n: int, k: int) -> Fraction:
    if k < 0 or n < 0 or k > n:
        return Fraction(0)
    return Fraction(comb(n, k))


@lru_cache(maxsize=None)
def stirling1_unsigned(n: int, k: int) -> int:
    """Permutations of n elements with exactly k cycles."""
    if n < 0 or k < 0 or k > n:
        return 0
    if n == k:
        return 1
    if k == 0:
        return 0
    return stirling1_unsigned(n - 1, k - 1) + (n - 1) * stirling1_unsigned(n - 1, k)


def stirling1_signed(n: int, k: int) -> int:
    """Signed convention: ``ln(1+x)^k = k! sum_n s(n, k) x^n / n!``."""
    return (-1) ** ((n - k) % 2) * stirling1_unsigned(n, k)


stirling1 = stirling1_signed


def stirling2(n: int, k: int) -> int:
    """Set partitions of n elements into k blocks, by the alternating binomial sum."""
    if n < 0 or k < 0 or k > n:
        return 0
    total = sum((-1) ** (k - j) * comb(k, j) * j ** n for j in range(k + 1))
    q, r = divmod(total, factorial(k))
    assert r == 0
    return q


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- series ---------------------------------------------------------------


def _geometric_h(params, order):
    a, b = params
    return make_series([b * a ** n for n in range(order + 1)], order)


def _linquad(params, order):
    a, b = params
    return make_series([0, a, b][: order + 1], order)


def _log1p(params, order):
    return make_series(
        [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)], order
    )


def _expm1(params, order):
    return make_series(
        [0] + [Fraction(1, factorial(n)) for n in range(1, order + 1)], order
    )


def _catalan_c(params, order):
    # first column of the closed-form composita (k/n) C(2n-k-1, n-1) at k = 1
    return make_series(
        [0] + [_catalan_c_entry(n, 1) for n in range(1, order + 1)], order
    )


def _catalan_gf(params, order):
    return make_series([catalan_number(n) for n in range(order + 1)], order)


def _xcotx(params, order):
    # x cos x / sin x = cos x / (sin x / x), all exact
    cos = [
        Fraction((-1) ** (n // 2), factorial(n)) if n % 2 == 0 else Fraction(0)
        for n in range(order + 1)
    ]
    sinc = [
        Fraction((-1) ** (n // 2), factorial(n + 1)) if n % 2 == 0 else Fraction(0)
        for n in range(order + 1)
    ]
    return mul(make_series(cos, order), reciprocal(make_series(sinc, order)))


def _a105306_h(params, order):
    return mul(make_series([1, -1][: order + 1], order),
               reciprocal(make_series([1, -2][: order + 1], order)))


def _log1m_2x(params, order):
    coeffs = [Fraction(0), Fraction(1)] + [Fraction(-1, n) for n in range(2, order + 1)]
    return make_series(coeffs[: order + 1], order)


# -- closed-form compositae ----------------------------------------------


def _geometric_entry(params):
    a, b = params
    return lambda n, k: binom(n - 1, k - 1) * a ** (n - k) * b ** k


def _linquad_entry(params):
    a, b = params

    def entry(n, k):
        if n - k > k:
            return Fraction(0)
        return binom(k, n - k) * a ** (2 * k - n) * b ** (n - k)

    return entry


def _log1p_entry(params):
    return lambda n, k: Fraction(factorial(k), factorial(n)) * stirling1_signed(n, k)


def _expm1_entry(params):
    return lambda n, k: Fraction(factorial(k), factorial(n)) * stirling2(n, k)


def _catalan_c_entry(n, k):
    return Fraction(k, n) * binom(2 * n - k - 1, n - 1)


def _a105306_entry(params):
    # [x^(n-k)] (1-x)^k (1-2x)^(-k)
    def entry(n, k):
        return sum(
            (
                2 ** i * binom(k, n - k - i) * binom(k + i - 1, k - 1) * (-1) ** (n - k - i)
                for i in range(n - k + 1)
            ),
            Fraction(0),
        )

    return entry


def _xcotx_entry(params):
    def entry(n, k):
        total = Fraction(0)
        for l in range(k + 1):
            r = n - 2 * k + l
            if r < 0:
                continue
            inner = sum(
                (
                    Fraction(
                        factorial(m) * stirling1_signed(l + m, l) * stirling2(r, m),
                        factorial(l + m) * factorial(r),
                    )
                    for m in range(r + 1)
                ),
                Fraction(0),
            )
            total += 2 ** l * factorial(l) * comb(k, l) * inner
        if (n - k) % 2:
            # x^2 cot x is odd, so these entries vanish; the sum must agree
            if total != 0:
                raise ArithmeticError(f"odd-offset entry ({n}, {k}) did not cancel")
            return Fraction(0)
        return total * Fraction(2) ** (n - 2 * k) * (-1) ** ((n - k) // 2)

    return entry


def _log1m_2x_entry(params):
    def entry(n, k):
        return sum(
            (
                Fraction(
                    (-1) ** (n - j) * 2 ** j * comb(k, j) * factorial(k - j),
                    factorial(n - j),
                )
                * stirling1_signed(n - j, k - j)
                for j in range(k + 1)
            ),
            Fraction(0),
        )

    return entry


@dataclass(frozen=True)
class Builtin:
    name: str
    arity: int
    kind: str
    series: Callable[[tuple, int], Series]
    closed_form: Optional[Callable[[tuple], Callable[[int, int], Fraction]]]
    description: str


BUILTINS: dict[str, Builtin] = {
    b.name: b
    for b in [
        Builtin("geometric_h", 2, "h", _geometric_h, _geometric_entry,
                "b/(1-a x); triangle of b x/(1-a x)"),
        Builtin("pascal_h", 0, "h", lambda p, N: _geometric_h((1, 1), N),
                lambda p: _geometric_entry((1, 1)),
                "1/(1-x); Pascal's triangle C(n-1, k-1)"),
        Builtin("linquad", 2, "g", _linquad, _linquad_entry, "a x + b x^2"),
        Builtin("log1p", 0, "g", _log1p, _log1p_entry, "ln(1+x)"),
        Builtin("expm1", 0, "g", _expm1, _expm1_entry, "exp(x) - 1"),
        Builtin("catalan_c", 0, "g", _catalan_c, lambda p: _catalan_c_entry,
                "(1 - sqrt(1-4x))/2"),
        Builtin("catalan_gf", 0, "h", _catalan_gf, lambda p: _catalan_c_entry,
                "(1 - sqrt(1-4x))/(2x), the Catalan numbers"),
        Builtin("xcotx", 0, "h", _xcotx, _xcotx_entry, "x cot x"),
        Builtin("a105306_h", 0, "h", _a105306_h, _a105306_entry,
                "(1-x)/(1-2x); triangle A105306"),
        Builtin("log1m_2x", 0, "g", _log1m_2x, _log1m_2x_entry, "ln(1-x) + 2x"),
    ]
}


@dataclass(frozen=True)
class BuiltinSpec:
    name: str
    params: tuple[Fraction, ...] = ()
    order: int = 10

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(to_rational(p) for p in self.params))

    @property
    def builtin(self) -> Builtin:
        try:
            b = BUILTINS[self.name]
        except KeyError:
            raise BuiltinError(
                f"unknown builtin {self.name!r}; known: {', '.join(sorted(BUILTINS))}"
            ) from None
        if len(self.params) != b.arity:
            raise BuiltinError(
                f"builtin {self.name} takes {b.arity} parameter(s), got {len(self.params)}"
            )
        return b

    @property
    def kind(self) -> str:
        return self.builtin.kind


def builtin_series(spec: BuiltinSpec) -> Series:
    return spec.builtin.series(spec.params, spec.order)


def triangle_series(spec: BuiltinSpec) -> Series:
    """Zero-constant series whose composita is the builtin's triangle, to ``spec.order``."""
    b = spec.builtin
    if b.kind == "g":
        return builtin_series(spec)
    lower = BuiltinSpec(spec.name, spec.params, max(spec.order - 1, 0))
    return shift_up(builtin_series(lower))


def builtin_composita(spec: BuiltinSpec) -> Composita:
    """Triangle from the closed form, without touching the engine."""
    b = spec.builtin
    if b.closed_form is None:
        raise BuiltinError(f"builtin {spec.name} has no closed-form composita")
    return Composita.from_function(spec.order, b.closed_form(spec.params))


def engine_composita(spec: BuiltinSpec) -> Composita:
    """The same triangle computed by the convolution recurrence."""
    return composita_of(triangle_series(spec))

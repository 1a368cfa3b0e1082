"""Truncated formal power series with exact rational coefficients.

A :class:`Series` of order ``N`` stores the coefficients of ``x^0 .. x^N``
and every operation is carried out modulo ``x^(N+1)``.  When two operands
have different orders the result is re-truncated to the smaller one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Union

__all__ = [
    "Series",
    "SeriesError",
    "to_rational",
    "make_series",
    "zero",
    "one",
    "x",
    "add",
    "sub",
    "scalar_mul",
    "mul",
    "pow_trunc",
    "derivative",
    "integrate0",
    "reciprocal",
    "compose",
    "revert",
    "shift_up",
    "shift_down",
]

Scalar = Union[int, Fraction, str]


class SeriesError(ValueError):
    """Raised when a series operation's precondition does not hold."""


def to_rational(value: Scalar) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a canonical Fraction.

    Floats are refused: they would smuggle rounding into exact results.
    """
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (int, Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise SeriesError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True)
class Series:
    """Power series ``sum coeffs[n] x^n`` known modulo ``x^(order+1)``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(
            self, "coeffs", tuple(to_rational(c) for c in self.coeffs)
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        """Coefficient of ``x^n``; indices past the order raise IndexError."""
        if n < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def truncate(self, order: int) -> Series:
        """Drop coefficients above ``order`` (which must not exceed the current one)."""
        if order < 0 or order > self.order:
            raise SeriesError(f"cannot truncate order {self.order} series to {order}")
        return Series(self.coeffs[: order + 1])

    def padded(self, order: int) -> Series:
        """Treat the known coefficients as a polynomial and extend it with zeros.

        Only sound when the caller knows that coefficients beyond the current
        order cannot influence the quantities it will read off.
        """
        if order <= self.order:
            return self.truncate(order)
        return Series(self.coeffs + (Fraction(0),) * (order - self.order))

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return sub(self, other)

    def __neg__(self):
        return scalar_mul(-1, self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        if isinstance(other, (int, Fraction, Rational)):
            return scalar_mul(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return pow_trunc(self, k)

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def make_series(coeffs: Iterable[Scalar], order: int) -> Series:
    """Build a series of the given order, zero-padding ``coeffs``."""
    if order < 0:
        raise SeriesError(f"order must be non-negative, got {order}")
    values = [to_rational(c) for c in coeffs]
    if len(values) > order + 1:
        raise SeriesError(
            f"{len(values)} coefficients do not fit in a series of order {order}"
        )
    values.extend([Fraction(0)] * (order + 1 - len(values)))
    return Series(tuple(values))


def zero(order: int) -> Series:
    return make_series([], order)


def one(order: int) -> Series:
    return make_series([1], order)


def x(order: int) -> Series:
    """The series ``x`` itself (requires order >= 1 to be visible)."""
    return make_series([0, 1][: order + 1], order)


def _common_order(a: Series, b: Series) -> int:
    return min(a.order, b.order)


def add(a: Series, b: Series) -> Series:
    n = _common_order(a, b)
    return Series(tuple(a[i] + b[i] for i in range(n + 1)))


def sub(a: Series, b: Series) -> Series:
    n = _common_order(a, b)
    return Series(tuple(a[i] - b[i] for i in range(n + 1)))


def scalar_mul(c: Scalar, a: Series) -> Series:
    c = to_rational(c)
    return Series(tuple(c * v for v in a.coeffs))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product modulo ``x^(N+1)``, N the smaller of the two orders."""
    n = _common_order(a, b)
    ac, bc = a.coeffs, b.coeffs
    # skip zero coefficients of a: sparse inputs (x^k, x*H) are common here
    support = [(i, ac[i]) for i in range(n + 1) if ac[i]]
    out = []
    for m in range(n + 1):
        s = Fraction(0)
        for i, ai in support:
            if i > m:
                break
            s += ai * bc[m - i]
        out.append(s)
    return Series(tuple(out))


def pow_trunc(a: Series, k: int) -> Series:
    """``a^k`` modulo ``x^(N+1)`` by repeated squaring; ``a^0`` is 1."""
    if k < 0:
        raise SeriesError("negative powers are not supported, use reciprocal()")
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def derivative(a: Series) -> Series:
    """Term-by-term derivative; the order drops by one."""
    if a.order < 1:
        raise SeriesError("derivative needs a series of order >= 1")
    return Series(tuple((n + 1) * a[n + 1] for n in range(a.order)))


def integrate0(a: Series) -> Series:
    """Antiderivative with zero constant term; the order rises by one."""
    return Series((Fraction(0),) + tuple(a[n - 1] / n for n in range(1, a.order + 2)))


def reciprocal(a: Series) -> Series:
    """Multiplicative inverse ``1/a`` modulo ``x^(N+1)``.

    Uses b(0) = 1/a(0), b(n) = -(1/a(0)) * sum_{i=1..n} a(i) b(n-i).
    """
    if a[0] == 0:
        raise SeriesError("zero constant term: not invertible as a power series")
    inv0 = 1 / a[0]
    b = [inv0]
    for n in range(1, a.order + 1):
        s = sum((a[i] * b[n - i] for i in range(1, n + 1)), Fraction(0))
        b.append(-inv0 * s)
    return Series(tuple(b))


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(x))`` modulo ``x^(N+1)`` by Horner accumulation.

    ``inner`` must have a zero constant term so that the result is a
    well-defined formal series.
    """
    if inner[0] != 0:
        raise SeriesError("composition needs inner(0) = 0")
    n = _common_order(outer, inner)
    inner = inner.truncate(n)
    acc = make_series([outer[n]], n)
    for i in range(n - 1, -1, -1):
        acc = mul(acc, inner)
        acc = Series((acc[0] + outer[i],) + acc.coeffs[1:])
    return acc


def revert(a: Series) -> Series:
    """Compositional inverse W with ``a(W(x)) = x`` modulo ``x^(N+1)``.

    Solved one coefficient at a time: the x^n coefficient of a(W) is
    a(1) w(n) plus terms involving only w(1..n-1), so each step is a
    single division.  Independent of the composita machinery on purpose.
    """
    if a.order < 1 or a[0] != 0 or a[1] == 0:
        raise SeriesError("no compositional inverse: need a(0) = 0 and a(1) != 0")
    n_max = a.order
    w = [Fraction(0), 1 / a[1]] + [Fraction(0)] * (n_max - 1)
    for n in range(2, n_max + 1):
        partial = compose(a, Series(tuple(w[: n + 1])))
        w[n] = -partial[n] / a[1]
    return Series(tuple(w))


def shift_up(a: Series) -> Series:
    """Multiply by x.  The order grows by one since x*O(x^(N+1)) = O(x^(N+2))."""
    return Series((Fraction(0),) + a.coeffs)


def shift_down(a: Series) -> Series:
    """Divide by x; needs a zero constant term and order >= 1."""
    if a[0] != 0:
        raise SeriesError("cannot divide by x: nonzero constant term")
    if a.order < 1:
        raise SeriesError("cannot divide an order-0 series by x")
    return Series(a.coeffs[1:])

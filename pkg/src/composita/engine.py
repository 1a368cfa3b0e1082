"""Composita triangles and the transformations between them.

The composita of a series ``g`` with ``g(0) = 0`` is the lower-triangular
array ``T(n, k) = [x^n] g(x)^k`` for ``1 <= k <= n <= N``.  It is built by
the convolution recurrence ``T(n, k) = sum_i g(i) T(n-i, k-1)``, never by
enumerating integer compositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from .series import (
    Scalar,
    Series,
    make_series,
    reciprocal,
    shift_up,
    to_rational,
)

__all__ = [
    "Composita",
    "CompositaError",
    "composita_of",
    "compose_compositae",
    "reciprocal_composita_series",
    "reciprocal_composita_lemma",
    "reciprocal_composita",
    "inverse_composita",
    "scale_composita",
    "central_diagonal",
    "first_column",
    "lemma_source_order",
]


class CompositaError(ValueError):
    """Raised when a composita operation's precondition does not hold."""


@dataclass(frozen=True)
class Composita:
    """Lower-triangular array; ``rows[n-1][k-1]`` holds entry ``(n, k)``."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise CompositaError("a composita needs at least one row")
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.rows)
        for n, row in enumerate(rows, start=1):
            if len(row) != n:
                raise CompositaError(f"row {n} has {len(row)} entries, expected {n}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, order: int, entry) -> Composita:
        """Tabulate ``entry(n, k)`` over the triangle ``1 <= k <= n <= order``."""
        if order < 1:
            raise CompositaError("composita order must be >= 1")
        return cls(
            tuple(
                tuple(entry(n, k) for k in range(1, n + 1))
                for n in range(1, order + 1)
            )
        )

    @property
    def order(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> Fraction:
        if n < 1 or n > self.order:
            raise IndexError(f"row {n} outside 1..{self.order}")
        if k < 1 or k > n:
            # lower triangular; the k = 0 column of g^0 vanishes for n >= 1
            return Fraction(0)
        return self.rows[n - 1][k - 1]

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        return self.entry(*nk)

    def __iter__(self) -> Iterator[tuple[int, int, Fraction]]:
        for n, row in enumerate(self.rows, start=1):
            for k, v in enumerate(row, start=1):
                yield n, k, v

    def truncate(self, order: int) -> Composita:
        if order < 1 or order > self.order:
            raise CompositaError(
                f"cannot truncate order {self.order} composita to {order}"
            )
        return Composita(self.rows[:order])

    def diagonal(self) -> list[Fraction]:
        return [self.rows[n][n] for n in range(self.order)]


def composita_of(g: Series, order: int | None = None) -> Composita:
    """Composita of ``g`` (``g(0) = 0``) up to row ``order`` (default ``g.order``)."""
    if order is None:
        order = g.order
    if order < 1 or order > g.order:
        raise CompositaError(
            f"composita order {order} needs a source series of order >= {order}"
        )
    if g[0] != 0:
        raise CompositaError("composita requires g(0)=0")
    gc = g.coeffs
    cols: list[list[Fraction]] = []
    # cols[k-1][n] = [x^n] g^k; the column for k is zero below n = k
    prev = [Fraction(0)] + [gc[n] for n in range(1, order + 1)]
    cols.append(prev)
    support = [(i, gc[i]) for i in range(1, order + 1) if gc[i]]
    for k in range(2, order + 1):
        cur = [Fraction(0)] * (order + 1)
        for n in range(k, order + 1):
            s = Fraction(0)
            for i, gi in support:
                if i > n - k + 1:
                    break
                s += gi * prev[n - i]
            cur[n] = s
        cols.append(cur)
        prev = cur
    return Composita(
        tuple(tuple(cols[k - 1][n] for k in range(1, n + 1)) for n in range(1, order + 1))
    )


def compose_compositae(outer: Composita, inner: Composita) -> Composita:
    """Composita of ``f(g(x))`` from those of ``f`` and ``g``.

    ``(f o g)(n, k) = sum_{m=k..n} f(m, k) g(n, m)``: the product of the
    two triangles viewed as lower-triangular matrices.
    """
    if outer.order != inner.order:
        raise CompositaError(
            f"order mismatch: outer has {outer.order} rows, inner has {inner.order}"
        )

    def entry(n, k):
        return sum(
            (outer.entry(m, k) * inner.entry(n, m) for m in range(k, n + 1)),
            Fraction(0),
        )

    return Composita.from_function(outer.order, entry)


def reciprocal_composita_series(h: Series, order: int | None = None) -> Composita:
    """Composita of ``x / h(x)`` by inverting the series directly.

    The order of ``x/h`` is one more than that of ``h``, so the default is
    ``h.order + 1`` rows.
    """
    if h[0] == 0:
        raise CompositaError("reciprocal composita requires h(0) != 0")
    return composita_of(shift_up(reciprocal(h)), order)


def _largest_order(need: Callable[[int], int], available: int) -> int:
    n = 0
    while need(n + 1) <= available:
        n += 1
    return n


def _series_inverse_need(order: int) -> int:
    return 2 * order - 1


def _lemma_inverse_need(order: int) -> int:
    return lemma_source_order(2 * order - 1)


def lemma_source_order(order: int) -> int:
    """Rows of ``B``'s composita the closed-form reciprocal needs for ``order`` rows.

    Entry ``(n, k)`` reads ``B(n-k+j, j)`` with ``j <= n-k``, so row ``2(n-k)``
    is reached; ``order`` itself is also required so row counts line up.
    """
    return max(2 * order - 2, order, 1)


def reciprocal_composita_lemma(bx: Composita, order: int | None = None) -> Composita:
    """Composita of ``x H(x)`` from the composita of ``x B(x)``, ``H B = 1``, ``b(0) = 1``.

    Evaluates, for n > k,

        H(n, k) = sum_{m=1}^{n-k} C(k+m-1, k-1) sum_{j=1}^{m} (-1)^j C(m, j) B(n-k+j, j)

    with unit diagonal.  The inner sum depends on ``(n-k, m)`` only and is
    tabulated once.  ``bx`` must reach row ``2*order - 2``; the default
    output order is the largest one the input supports.
    """
    if any(v != 1 for v in bx.diagonal()):
        raise CompositaError("reciprocal composita formula requires b(0)=1; normalize first")
    max_order = _largest_order(lemma_source_order, bx.order)
    if order is None:
        order = max_order
    if order < 1:
        raise CompositaError("composita order must be >= 1")
    if order > max_order:
        raise CompositaError(
            f"{order} rows of the reciprocal composita need "
            f"{lemma_source_order(order)} source rows, got {bx.order}"
        )
    inner: dict[tuple[int, int], Fraction] = {}
    for d in range(1, order):
        for m in range(1, d + 1):
            inner[d, m] = sum(
                ((-1) ** j * comb(m, j) * bx.entry(d + j, j) for j in range(1, m + 1)),
                Fraction(0),
            )

    def entry(n, k):
        if n == k:
            return Fraction(1)
        d = n - k
        return sum(
            (comb(k + m - 1, k - 1) * inner[d, m] for m in range(1, d + 1)),
            Fraction(0),
        )

    return Composita.from_function(order, entry)


def reciprocal_composita(bx: Composita, order: int | None = None) -> Composita:
    """Closed-form reciprocal composita for any nonzero ``b(0)``.

    Divides out ``c = b(0)`` with the ``c^k`` scaling law, applies the unit
    case and scales back by ``1/c``.
    """
    c = bx.entry(1, 1)
    if c == 0:
        raise CompositaError("reciprocal composita requires b(0) != 0")
    if c == 1:
        return reciprocal_composita_lemma(bx, order)
    unit = scale_composita(1 / c, bx)
    return scale_composita(1 / c, reciprocal_composita_lemma(unit, order))


def inverse_composita(
    a: Composita, order: int | None = None, method: str = "series"
) -> Composita:
    """Composita of the compositional inverse of the series behind ``a``.

    ``Inv(n, k) = (k/n) R(2n-k, n)`` where ``R`` is the reciprocal
    composita of ``a``, i.e. the composita of ``x^2 / A(x)``.  With
    ``method="series"`` ``R`` comes from inverting ``A(x)/x`` (recovered
    from the first column of ``a``); with ``method="lemma"`` it comes from
    :func:`reciprocal_composita` applied to ``a`` itself, which needs about
    twice as many source rows.
    """
    if a.entry(1, 1) == 0:
        raise CompositaError("no compositional inverse: linear coefficient is zero")
    if method == "series":
        need = _series_inverse_need
    elif method == "lemma":
        need = _lemma_inverse_need
    else:
        raise ValueError(f"unknown method {method!r}")
    if order is None:
        order = max(_largest_order(need, a.order), 1)
    if order < 1:
        raise CompositaError("composita order must be >= 1")
    if need(order) > a.order:
        raise CompositaError(
            f"inverse composita of order {order} needs {need(order)} source rows "
            f"(2N-1 for the reciprocal), got {a.order}"
        )
    r_order = 2 * order - 1
    if method == "series":
        p = first_column(a)  # A(x)/x
        recip = reciprocal_composita_series(p.truncate(r_order - 1), r_order)
    else:
        recip = reciprocal_composita(a, r_order)
    return Composita.from_function(
        order, lambda n, k: Fraction(k, n) * recip.entry(2 * n - k, n)
    )


def scale_composita(c: Scalar, g: Composita) -> Composita:
    """Composita of ``c*g`` from that of ``g``: entry ``(n, k)`` times ``c^k``."""
    c = to_rational(c)
    if c == 0:
        raise CompositaError("scale factor must be nonzero")
    return Composita(
        tuple(tuple(v * c ** k for k, v in enumerate(row, start=1)) for row in g.rows)
    )


def central_diagonal(g: Composita) -> list[Fraction]:
    """Central coefficients ``T(2n-1, n)`` for ``n = 1 .. ceil(order/2)``."""
    return [g.entry(2 * n - 1, n) for n in range(1, (g.order + 1) // 2 + 1)]


def first_column(g: Composita) -> Series:
    """Series with ``x^(n-1)`` coefficient ``T(n, 1)``.

    For the composita of ``g`` this is ``g(x)/x``; for the triangle of
    ``x H(x)`` it is ``H`` itself.
    """
    return make_series([g.entry(n, 1) for n in range(1, g.order + 1)], g.order - 1)


"""Brute-force reference computations.

Nothing here imports the package: these are deliberately naive list-based
routines used to freeze expected values and to cross-check the library.
"""

from fractions import Fraction


def poly_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out


def poly_pow(a, k, order):
    """k-fold repeated multiplication, no squaring."""
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(k):
        out = poly_mul(out, a, order)
    return out


def compositions(n, k):
    """All ordered k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def composita_by_compositions(g, n, k):
    """Sum over k-part compositions of n of g(l1)...g(lk)."""
    total = Fraction(0)
    for parts in compositions(n, k):
        term = Fraction(1)
        for p in parts:
            term *= g[p]
        total += term
    return total


def poly_compose(outer, inner, order):
    """Sum outer[i] * inner^i by explicit powers."""
    out = [Fraction(0)] * (order + 1)
    for i, c in enumerate(outer[: order + 1]):
        p = poly_pow(inner, i, order)
        for j in range(order + 1):
            out[j] += c * p[j]
    return out


def series_inverse_by_search(a, order):
    """Compositional inverse by solving a(w(x)) = x one coefficient at a time
    with explicit composition; used only for tiny orders."""
    w = [Fraction(0), 1 / Fraction(a[1])] + [Fraction(0)] * (order - 1)
    for n in range(2, order + 1):
        c = poly_compose(a, w, order)[n]
        w[n] = -c / a[1]
    return w


def count_compositions_check(n):
    # 2^(n-1) compositions of n in total
    return sum(1 for k in range(1, n + 1) for _ in compositions(n, k)) == 2 ** (n - 1)


__all__ = [
    "poly_mul",
    "poly_pow",
    "compositions",
    "composita_by_compositions",
    "poly_compose",
    "series_inverse_by_search",
    "count_compositions_check",
]

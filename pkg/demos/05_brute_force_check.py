"""
Compositae by brute force
=========================

The composita entry T(n,k) is the coefficient of x^n in g(x)^k. For small
sizes it can be checked by summing g(l1)*...*g(lk) over every ordered
k-tuple of positive parts summing to n.
"""

from fractions import Fraction
from itertools import product
from math import prod

from composita import composita_of, make_series

g = make_series([0, 1, Fraction(-1, 2), 3, 0, Fraction(2, 7)], 5)
tri = composita_of(g)


def by_compositions(n, k):
    return sum(
        (prod(g[p] for p in parts) for parts in product(range(1, n + 1), repeat=k) if sum(parts) == n),
        Fraction(0),
    )


# %%
ok = all(tri.entry(n, k) == by_compositions(n, k) for n in range(1, 6) for k in range(1, n + 1))
print("engine agrees with the definition:", ok)
for row in tri.rows:
    print(" ".join(str(v) for v in row))

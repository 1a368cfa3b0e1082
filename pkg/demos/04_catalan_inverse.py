"""
Going backwards: which triangle has the Catalan numbers down its middle?
=========================================================================

Given F(x) = 1 + x + 2x^2 + 5x^3 + ..., the inverse transform finds the unique
H with H(0) = 1 whose triangle has F as its central coefficients. Its
entries are rationals.
"""

from composita import central_forward, central_inverse, make_series
from composita.seqfile import fixture_path, read_bfile
from composita.textio import render_triangle

catalan = read_bfile(fixture_path("A000108")).values
f = make_series(catalan[:9], 8)

# %%
res = central_inverse(f, 9)
print("H =", res.h_series)
print(render_triangle(res.triangle, "plain"))

# %%
# Two independent routes to the same triangle, and the forward transform
# brings us back to F.
lemma = central_inverse(f, 9, method="lemma")
print("routes agree:", lemma.triangle == res.triangle)
print("round trip:", central_forward(res.h_series, 9).central_gf == f)

"""
Central binomial coefficients from the Pascal triangle
=======================================================

The triangle of H(x) = 1/(1-x) is Pascal's triangle. Reading down its middle
gives the central binomial coefficients 1, 2, 6, 20, ...
"""

from composita import BuiltinSpec, builtin_series, central_forward
from composita.textio import render_triangle

# %%
# Ask for ten central terms. The forward transform builds 2*10-1 rows.
h = builtin_series(BuiltinSpec("pascal_h", order=18))
res = central_forward(h, 10)
print("central terms:", [int(v) for v in res.central_gf])

# %%
# A(x) solves A = x H(A), here A = x/(1-A), the Catalan generating function.
print("A:", [int(v) for v in res.a_series])

# %%
# The first few rows, to see where the diagonal comes from.
print(render_triangle(res.triangle.truncate(7), "plain"))

"""
H(x) = (1-x)/(1-2x)
===================

Solving A = x H(A) gives the little Schroeder numbers, and the central
coefficients of the triangle of H form another integer sequence.
"""

from composita import (
    BuiltinSpec,
    builtin_composita,
    builtin_series,
    central_forward,
    engine_composita,
    solve_functional_equation,
)

h = builtin_series(BuiltinSpec("a105306_h", order=10))

# %%
a = solve_functional_equation(h, 7)
print("A:", [int(v) for v in a][1:])

# %%
f = central_forward(h, 6).central_gf
print("central terms:", [int(v) for v in f])

# %%
# The catalog ships a binomial-sum formula for this triangle; check it
# against the convolution engine.
spec = BuiltinSpec("a105306_h", order=10)
print("closed form agrees with engine:", builtin_composita(spec) == engine_composita(spec))

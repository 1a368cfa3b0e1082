"""
x cot x and the arctangent
==========================

With H(x) = x cot x the functional equation A = x H(A) is solved by
A(x) = arctan x, so A'(x) = 1/(1+x^2).
"""

from composita import (
    BuiltinSpec,
    builtin_series,
    composita_of,
    derivative,
    solve_functional_equation,
    triangle_series,
)
from composita.textio import render_triangle

# %%
# The triangle of x^2 cot x. Odd diagonals vanish because x cot x is even.
g = triangle_series(BuiltinSpec("xcotx", order=6))
print(render_triangle(composita_of(g, 6), "plain"))

# %%
h = builtin_series(BuiltinSpec("xcotx", order=8))
a = solve_functional_equation(h, 9)
print("A  =", a)
print("A' =", derivative(a))

"""
Power sums and point ideals
===========================

F is a sum of cubes of the linear forms l_i exactly when the ideal of
the points [l_i] sits inside F^perp.
"""

from apolarity import decompose_check, parse_poly
from apolarity.parse import parse_list

pts = parse_list("x0 + x1, x0 - 2*x2, x1 + x2", nvars=3)
F = pts[0] ** 3 + 3 * pts[1] ** 3 + pts[2] ** 3

res = decompose_check(F, pts)
print("success", res.success, "coefficients", res.coefficients)
print("containment by degree", res.containment)

# one extra monomial breaks both sides at once
res = decompose_check(F + parse_poly("x0*x1*x2"), pts)
print("perturbed:", res.success, res.containment)

"""
Operators acting on forms
=========================

Differentiation, catalecticants and the Hilbert function of T/F^perp.
"""

from apolarity import annihilator_piece, apply_op, catalecticant, hilbert_function, parse_poly

F = parse_poly("x0^3 + x1^3 + x2^3")

# y0^2 differentiates twice in x0
print(apply_op(parse_poly("y0^2", nvars=3), F))

# contraction drops the factorials
print(apply_op(parse_poly("y0^2", nvars=3), F, action="contraction"))

# the catalecticant T_1 -> S_2 and its rank
M = catalecticant(F, 1)
for row in M.rows:
    print(row)
print("rank", M.rank())

# Hilbert function, symmetric because T/F^perp is Gorenstein
print(hilbert_function(F))

# quadrics killing F
for g in annihilator_piece(F, 2).basis:
    print(" ", g)

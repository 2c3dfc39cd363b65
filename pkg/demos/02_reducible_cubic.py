"""
A reducible cubic with a short apolar scheme
============================================

F = x0 (x0^2 + ... + xn^2).  Its quadric annihilators have no common zero,
and dehomogenizing at x0 gives a local scheme of length n + 2.
"""

import math

from apolarity import annihilator_piece, empty_projective, gamma_scheme, parse_poly

n = 4
F = parse_poly("x0^3 + " + " + ".join(f"x0*x{i}^2" for i in range(1, n + 1)))
print(F)

A = annihilator_piece(F, 2)
print("dim F^perp_2 =", A.dim, "vs C(n+1, 2) =", math.comb(n + 1, 2))

# the ideal they generate fills T_t for large t, so the quadrics share no zero
res = empty_projective([A], t_max=8)
print("quotient dims", res.quotient_dims, "certified at t =", res.degree)

S = gamma_scheme(F, parse_poly("x0", nvars=n + 1))
print("length of the apolar scheme:", S.length)
for G in S.generators[:5]:
    print("  kills F:", G)

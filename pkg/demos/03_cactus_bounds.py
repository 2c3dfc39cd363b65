"""
Bracketing the cactus rank of a random cubic
============================================

Below: the largest catalecticant rank.  Above: the length of Diff(F_l)
for a few linear forms l, which never exceeds N_d.
"""

from apolarity import GF, generic_rank, nd_bound, random_form, rank_report

n = 8
F = random_form(n, 3, seed=1, field=GF())
rep = rank_report(F, extra=2, seed=1)
print("Hilbert function", rep.hilbert)
print("bracket", rep.bracket(), "N_d =", rep.nd)

# past n = 8 the Diff bound beats the generic Waring rank
for m in range(2, 11):
    print(m, nd_bound(m, 3), generic_rank(m, 3).value)

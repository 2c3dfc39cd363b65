"""
Defective secant varieties
==========================

Terracini's lemma over F_p: the span of tangent spaces at r random points
of the Veronese.  Four small cases fall one short of the expected dimension.
"""

from apolarity import generic_rank, secant_dimension
from apolarity.rank import expected_secant_dimension

for n, d, r in [(2, 4, 5), (3, 4, 9), (4, 4, 14), (4, 3, 7), (2, 3, 3), (3, 3, 5)]:
    got = secant_dimension(n, d, r)
    exp = expected_secant_dimension(n, d, r)
    print(f"n={n} d={d} r={r}: dim {got}, expected {exp}, defect {exp - got},"
          f" generic rank {generic_rank(n, d).value}")

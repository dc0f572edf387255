"""Kostant partitions and the three orders on them.

For beta = n*alpha_1 + m*alpha_0 with rank r = m - n > 0 the Kostant
partitions built only from the real roots beta_k correspond to partitions
of n into at most r parts.  This walk-through lists them for one beta and
compares dominance of the attached weights, the degeneration order of the
matching preprojective Kronecker modules, and the bilexicographic order.

Run: python demos/01_kostant_orders.py [n,m]
"""

import sys

from kronnil.kostant import bilex_leq, dominance_leq, enumerate_gamma, kp_to_weight
from kronnil.kronecker import degeneration_leq, preprojective_type
from kronnil.roots import DimVector

beta = DimVector.parse(sys.argv[1]) if len(sys.argv) > 1 else DimVector(3, 6)
gamma = enumerate_gamma(beta)
print(f"beta = {beta} (rank {beta.rank}) has {len(gamma)} partitions in Gamma_beta:\n")
for pi in gamma:
    print(f"  {pi.token:<16} lambda = {kp_to_weight(pi)}   module {preprojective_type(pi)}")

# Dominance and degeneration should be the same relation; bilex only refines it.
print("\n  pi <= sigma          dominance  degeneration  bilex")
agree = True
for pi in gamma:
    for sigma in gamma:
        if pi == sigma:
            continue
        dom = dominance_leq(kp_to_weight(pi), kp_to_weight(sigma))
        deg = degeneration_leq(preprojective_type(sigma), preprojective_type(pi))
        bil = bilex_leq(pi, sigma)
        agree &= dom == deg and (bil or not dom)
        if dom or deg:
            print(f"  {pi.token} <= {sigma.token:<10} {dom!s:<10} {deg!s:<13} {bil}")
print("\norders compatible:", agree)

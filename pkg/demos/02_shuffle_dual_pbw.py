"""Dual root vectors and dual PBW expansions in the quantum shuffle algebra.

The dual root vector of beta_n lives on words of weight (n, n+1).  Its
leading word is the good Lyndon word 0(01)^n.  Products of root vectors
are re-expanded in the dual PBW basis by an exact linear solve over Q(q).

Run: python demos/02_shuffle_dual_pbw.py
"""

from kronnil.conventions import DEFAULT
from kronnil.shuffle import ShuffleAlgebra

algebra = ShuffleAlgebra(DEFAULT)

for n in range(3):
    vec = algebra.dual_root_vector(n)
    word = "".join(map(str, algebra.good_lyndon_word(n)))
    print(f"E*(beta_{n}): {len(vec.terms)} words, good Lyndon word {word}")
    for w, c in sorted(vec.terms.items())[:4]:
        print(f"    {''.join(map(str, w))}: {c}")

print("\nE*(beta_0) E*(beta_0) is a q-multiple of one basis vector:")
for pi, c in algebra.expand_in_dual_pbw(algebra.power(algebra.dual_root_vector(0), 2)).items():
    print(f"    {pi.token}: {c}")

print("\nProducts in increasing order, re-expanded in the dual PBW basis:")
for i, j in [(0, 1), (0, 2), (1, 2)]:
    x = algebra.product(algebra.dual_root_vector(i), algebra.dual_root_vector(j))
    print(f"  E*(beta_{i}) E*(beta_{j}) =")
    for pi, c in sorted(algebra.expand_in_dual_pbw(x).items(), key=lambda kv: kv[0].token, reverse=True):
        print(f"    {c}  *  [{pi.token}]")

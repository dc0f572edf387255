"""Matching the two sides.

Conventions are frozen on the single product E*(beta_0) E*(beta_1); the
remaining structure constants with i + j <= 4 are then predictions.  On
the K-theory side the product is taken in the opposite order.

Run: python demos/04_cross_side.py
"""

from kronnil.checker import ktheory_side, shuffle_side, surviving_conventions
from kronnil.conventions import DEFAULT
from kronnil.shuffle import ShuffleAlgebra

print("conventions surviving the (0, 1) case:")
for conv in surviving_conventions():
    print(f"  letter order {conv.letter_order}, crossing {conv.crossing:+d}, "
          f"shift {conv.shift_sign:+d}, twist {conv.twist:+d}")
print(f"frozen: {DEFAULT}  hash {DEFAULT.hash}\n")

algebra = ShuffleAlgebra(DEFAULT)
for i, j in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4)]:
    left, right = shuffle_side(i, j, algebra), ktheory_side(i, j, DEFAULT)
    verdict = "agree" if left == right else "DISAGREE"
    print(f"E*(beta_{i}) E*(beta_{j}): {verdict}")
    for lam in sorted(left, reverse=True):
        print(f"    lambda {lam}: {left[lam]}")

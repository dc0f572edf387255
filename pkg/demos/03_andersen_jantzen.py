"""Andersen-Jantzen classes on the nilpotent cone of gl_r.

A(lambda) is stored as a numerator in Weyl characters over the fixed
denominator prod_{i != j}(1 - q^2 x_i/x_j).  For lambda = 0 its expansion
must be the graded character of the coordinate ring of the nilpotent cone,
which we also compute independently with a Groebner basis.

Run: python demos/03_andersen_jantzen.py
"""

from kronnil.ktheory import aj_class, delta_shift, induction_product, nilcone_graded_character

for lam in [(2,), (0, 0), (1, 0), (0, 1), (1, 0, 0)]:
    print(f"A{lam} = {aj_class(lam)}")

# the non-dominant (0, 1) is a q^2-shift of the dominant (1, 0)
print("\nA(0,1) == q^2 A(1,0):", aj_class((0, 1)) == aj_class((1, 0)).shift(2))

print("\nGraded character of the rank-2 nilpotent cone, by q-degree:")
series = aj_class((0, 0)).series(6)
oracle = nilcone_graded_character(2, 6)
for d in range(0, 7, 2):
    dim = sum(k for (_, e), k in series.items() if e == d)
    print(f"  q^{d}: dimension {dim}")
print("matches the Groebner-basis count:", series == oracle)

print("\nConvolution glues ranks: A(2) o A(1,0) == A(2,1,0):",
      induction_product(aj_class((2,)), aj_class((1, 0))) == aj_class((2, 1, 0)))

print("\nShifts delta_lambda:")
for lam in [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 0)]:
    print(f"  delta{lam} = {delta_shift(lam)}")

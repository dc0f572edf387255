"""Exact linear algebra over ``Q(q)`` with results cleared back to ``Z[q, q^-1]``.

Both basis expansions (dual PBW on the shuffle side, proper standards on the
K-theory side) reduce to a square linear system whose entries are Laurent
polynomials. The system is solved over the rational function field and every
solution coordinate must come back as an honest Laurent polynomial.
"""

from __future__ import annotations

from collections.abc import Sequence

from sympy import QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from .qlaurent import LaurentQ

FIELD_DOMAIN = QQ.frac_field(Symbol("q"))
_F = FIELD_DOMAIN.field
_R = _F.ring


class NotInSpan(ArithmeticError):
    """The target is not a combination of the requested basis."""


class NonLaurentCoefficient(ArithmeticError):
    """A coefficient is a genuine rational function of ``q``."""


def to_field(f: LaurentQ):
    if not f:
        return _F.zero
    v = min(0, f.valuation())
    num = _R.from_dict({(e - v,): c for e, c in f.items()})
    den = _R.from_dict({(-v,): 1})
    return _F.new(num, den)


def from_field(x) -> LaurentQ:
    """Convert an element of ``Q(q)`` to ``LaurentQ`` or raise."""
    num, den = x.numer, x.denom
    if not num:
        return LaurentQ()
    dterms = den.terms()
    if len(dterms) != 1:
        raise NonLaurentCoefficient(f"denominator {den.as_expr()} is not a monomial")
    (dexp,), dc = dterms[0]
    out = {}
    for (e,), c in num.terms():
        v = c / dc
        if v.denominator != 1:
            raise NonLaurentCoefficient(f"non-integral coefficient in {x.as_expr()}")
        out[e - dexp] = int(v.numerator)
    return LaurentQ(out)


def solve_square(matrix: Sequence[Sequence[LaurentQ]], rhs: Sequence[LaurentQ]) -> list:
    """Solve ``matrix @ x = rhs`` over ``Q(q)``; returns field elements."""
    k = len(rhs)
    if k == 0:
        return []
    m = DomainMatrix([[to_field(a) for a in row] for row in matrix], (k, k), FIELD_DOMAIN)
    b = DomainMatrix([[to_field(a)] for a in rhs], (k, 1), FIELD_DOMAIN)
    if m.det() == FIELD_DOMAIN.zero:
        raise NotInSpan("pivot system is singular")
    sol = m.lu_solve(b)
    return [sol[i, 0].element for i in range(k)]


def independent_rows(columns: Sequence[Sequence[LaurentQ]], probe: int = 3) -> list[int]:
    """Pick row indices on which the column vectors stay independent.

    Rows are chosen greedily by exact Gaussian elimination after the
    substitution ``q = probe``; a nonzero minor at one point certifies a
    nonzero minor over ``Q(q)``. Raises ``NotInSpan`` when the columns are
    dependent at the probe point, which the callers treat as rank deficiency.
    """
    from fractions import Fraction

    k = len(columns)
    if k == 0:
        return []
    nrows = len(columns[0])
    val = Fraction(probe)
    rows = [[columns[j][i].evaluate(val) for j in range(k)] for i in range(nrows)]
    chosen: list[int] = []
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    for i, row in enumerate(rows):
        r = list(row)
        for pc, b in basis:
            if r[pc]:
                f = r[pc] / b[pc]
                r = [x - f * y for x, y in zip(r, b)]
        piv = next((c for c in range(k) if r[c]), None)
        if piv is not None:
            basis.append((piv, r))
            chosen.append(i)
            if len(chosen) == k:
                return chosen
    raise NotInSpan(f"columns have rank {len(chosen)} < {k} at q={probe}")

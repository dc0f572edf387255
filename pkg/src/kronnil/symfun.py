"""Symmetric rational functions in ``x_1, ..., x_r`` over ``Z[q, q^-1]``.

This module is the slow, transparent side of the K-theory computations: it
works with sympy rational functions and explicit sums over ``S_r``. It also
provides the classical oracles used to cross-check the fast representation
in :mod:`kronnil.ktheory`: Hall-Littlewood polynomials, Kostka-Foulkes
polynomials via the charge statistic, and Schur polynomials.

The e-series section computes ``E_{-t}(x) / E_{-t}(y)`` in the ring of
elementary symmetric generators and checks its coproduct identity.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import permutations

import sympy as sp
from sympy.polys.rings import ring

from .qlaurent import LaurentQ
from .roots import DimVector

__all__ = [
    "q",
    "xs",
    "RationalSymExpr",
    "weyl_symmetrize",
    "hall_littlewood_P",
    "schur_polynomial",
    "ssyt",
    "charge",
    "kostka_foulkes",
    "partitions",
    "e_series_coeffs",
    "e_series_coproduct_holds",
    "RankGuardError",
]

q = sp.Symbol("q")
MAX_SYMMETRIZE_RANK = 6


class RankGuardError(ValueError):
    """Requested rank exceeds the factorial blow-up guard."""


def xs(r: int) -> tuple[sp.Symbol, ...]:
    return sp.symbols(f"x1:{r + 1}") if r else ()


class RationalSymExpr:
    """A rational function in ``x_1..x_r`` and ``q`` kept in reduced form.

    Equality is decided by cross-multiplication, so two values compare equal
    exactly when they define the same rational function.
    """

    __slots__ = ("expr", "rank", "num", "den")

    def __init__(self, expr, rank: int):
        expr = sp.cancel(sp.together(sp.sympify(expr)))
        num, den = sp.fraction(expr)
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        self.num = sp.expand(num)
        self.den = sp.expand(den)
        self.expr = expr
        self.rank = rank

    @property
    def variables(self):
        return xs(self.rank)

    def __eq__(self, other):
        if not isinstance(other, RationalSymExpr):
            other = RationalSymExpr(other, self.rank)
        return sp.expand(self.num * other.den - other.num * self.den) == 0

    def __hash__(self):  # equal values may hash differently only if sympy's cancel is not canonical
        return hash(sp.srepr(self.expr))

    def __add__(self, other):
        other = other.expr if isinstance(other, RationalSymExpr) else other
        return RationalSymExpr(self.expr + other, self.rank)

    def __sub__(self, other):
        other = other.expr if isinstance(other, RationalSymExpr) else other
        return RationalSymExpr(self.expr - other, self.rank)

    def __mul__(self, other):
        other = other.expr if isinstance(other, RationalSymExpr) else other
        return RationalSymExpr(self.expr * other, self.rank)

    __rmul__ = __mul__

    def permute(self, perm: Sequence[int]) -> "RationalSymExpr":
        """Apply ``x_i -> x_{perm[i]}``."""
        v = self.variables
        return RationalSymExpr(self.expr.xreplace({v[i]: v[perm[i]] for i in range(self.rank)}), self.rank)

    def is_weyl_invariant(self) -> bool:
        for i in range(self.rank - 1):
            perm = list(range(self.rank))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def subs_q(self, value) -> "RationalSymExpr":
        return RationalSymExpr(self.expr.subs(q, value), self.rank)

    def is_polynomial_in_x(self) -> bool:
        return not self.den.free_symbols & set(self.variables)

    def series(self, order: int) -> sp.Expr:
        """Expansion in ``q`` up to and including ``q^order``."""
        s = sp.series(self.expr, q, 0, order + 1).removeO()
        return sp.expand(s)

    def __str__(self) -> str:
        return f"({sp.sstr(sp.factor(self.num))})/({sp.sstr(sp.factor(self.den))})"

    def __repr__(self) -> str:
        return f"RationalSymExpr({self.expr}, rank={self.rank})"


def weyl_symmetrize(f: RationalSymExpr) -> RationalSymExpr:
    """``sum_{w in S_r} w(f)``, reduced."""
    if f.rank > MAX_SYMMETRIZE_RANK:
        raise RankGuardError(f"rank {f.rank} exceeds symmetrization guard {MAX_SYMMETRIZE_RANK}")
    v = f.variables
    total = sp.Integer(0)
    for perm in permutations(range(f.rank)):
        total += f.expr.xreplace({v[i]: v[perm[i]] for i in range(f.rank)})
    return RationalSymExpr(total, f.rank)


def _pad(lam: Sequence[int], r: int) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} parts")
    if any(a < b for a, b in zip(lam, lam[1:])) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not a partition")
    return lam + (0,) * (r - len(lam))


def hall_littlewood_P(lam: Sequence[int], r: int, t=None) -> RationalSymExpr:
    """Hall-Littlewood ``P_lambda(x_1..x_r; t)``; ``t`` defaults to ``q^2``.

    Computed from the symmetrization formula with normalization
    ``v_lambda(t) = prod_i prod_{k=1}^{m_i} (1 - t^k)/(1 - t)`` over the part
    multiplicities ``m_i`` (zero parts included).
    """
    t = q**2 if t is None else t
    lam = _pad(lam, r)
    v = xs(r)
    base = sp.Mul(*[v[i] ** lam[i] for i in range(r)])
    for i in range(r):
        for j in range(i + 1, r):
            base *= (v[i] - t * v[j]) / (v[i] - v[j])
    norm = sp.Integer(1)
    for part in set(lam):
        for k in range(1, lam.count(part) + 1):
            norm *= sum(t**a for a in range(k))
    return RationalSymExpr(weyl_symmetrize(RationalSymExpr(base, r)).expr / norm, r)


def schur_polynomial(lam: Sequence[int], r: int) -> RationalSymExpr:
    """Bialternant ``a_{lambda+delta} / a_delta``."""
    lam = _pad(lam, r)
    v = xs(r)
    num = sp.Matrix(r, r, lambda i, j: v[i] ** (lam[j] + r - 1 - j)).det()
    den = sp.Matrix(r, r, lambda i, j: v[i] ** (r - 1 - j)).det()
    return RationalSymExpr(num / den, r)


def partitions(n: int, max_parts: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], rest: int, cap: int):
        if rest == 0:
            out.append(prefix)
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for k in range(min(rest, cap), 0, -1):
            rec(prefix + (k,), rest - k, k)

    rec((), n, n)
    return out


def ssyt(shape: Sequence[int], max_entry: int, content: Sequence[int] | None = None) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of ``shape`` with entries in ``1..max_entry``.

    If ``content`` is given, only tableaux with exactly ``content[i]`` copies
    of ``i+1`` are produced.
    """
    shape = [s for s in shape if s]
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    grid: dict[tuple[int, int], int] = {}
    left = list(content) + [0] * (max_entry - len(content)) if content is not None else None

    def rec(k: int):
        if k == len(cells):
            yield tuple(tuple(grid[(i, j)] for j in range(row)) for i, row in enumerate(shape))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[(i, j - 1)])
        if i > 0:
            lo = max(lo, grid[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            if left is not None:
                if left[v - 1] == 0:
                    continue
                left[v - 1] -= 1
            grid[(i, j)] = v
            yield from rec(k + 1)
            if left is not None:
                left[v - 1] += 1
        grid.pop((i, j), None)

    yield from rec(0)


def charge(word: Sequence[int]) -> int:
    """Lascoux-Schutzenberger charge of a word with partition content.

    Standard subwords are extracted repeatedly: start at the rightmost 1 and
    move leftwards cyclically looking for 2, 3, ...; the index increases by
    one each time the search wraps around the end of the word.
    """
    letters = list(word)
    alive = [True] * len(letters)
    total = 0
    while any(alive):
        top = max(letters[i] for i in range(len(letters)) if alive[i])
        # position of the rightmost 1
        pos = max(i for i in range(len(letters)) if alive[i] and letters[i] == 1)
        alive[pos] = False
        index = 0
        for value in range(2, top + 1):
            cands = [i for i in range(len(letters)) if alive[i] and letters[i] == value]
            if not cands:
                break
            left = [i for i in cands if i < pos]
            if left:
                pos = max(left)
            else:
                pos = max(cands)
                index += 1
            total += index
            alive[pos] = False
    return total


def _reading_word(tableau) -> list[int]:
    out: list[int] = []
    for row in reversed(tableau):
        out.extend(row)
    return out


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> LaurentQ:
    """``K_{lambda,mu}(t) = sum_T t^charge(T)`` as a ``LaurentQ`` in ``t``."""
    lam, mu = tuple(x for x in lam if x), tuple(x for x in mu if x)
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different sizes")
    acc: dict[int, int] = {}
    for tab in ssyt(lam, len(mu), content=mu):
        c = charge(_reading_word(tab))
        acc[c] = acc.get(c, 0) + 1
    return LaurentQ(acc)


# -- e-series --------------------------------------------------------------


@lru_cache(maxsize=None)
def _e_ring(m: int, n: int):
    names = [f"ex{i}" for i in range(1, m + 1)] + [f"ey{j}" for j in range(1, n + 1)]
    if not names:
        names = ["_dummy"]
    R, *gens = ring(",".join(names), sp.ZZ)
    return R, gens


def _series(ex: Sequence, ey: Sequence, one, order: int) -> list:
    """Coefficients of ``E_{-t}(x) / E_{-t}(y)`` from elementary generators."""

    def e(seq, k):
        if k == 0:
            return one
        return seq[k - 1] if k <= len(seq) else 0 * one

    h = [one]
    for j in range(1, order + 1):
        h.append(sum(((-1) ** (i - 1) * e(ey, i) * h[j - i] for i in range(1, j + 1)), 0 * one))
    return [sum(((-1) ** i * e(ex, i) * h[k - i] for i in range(k + 1)), 0 * one) for k in range(order + 1)]


def e_series_coeffs(b: DimVector, order: int):
    """Coefficients of ``t^0 .. t^order`` of ``E_{-t}(x)/E_{-t}(y)``.

    ``x`` has ``m`` variables (vertex 0) and ``y`` has ``n`` (vertex 1); the
    result lives in the polynomial ring on ``e_1(x)..e_m(x), e_1(y)..e_n(y)``,
    i.e. in the quotient where ``e_i(x) = 0`` for ``i > m`` and ``e_j(y) = 0``
    for ``j > n``.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    R, gens = _e_ring(b.m, b.n)
    gens = gens if b.m + b.n else []
    return _series(gens[: b.m], gens[b.m:], R.one, order)


def e_series_coproduct_holds(b: DimVector, a: DimVector, order: int) -> bool:
    """Check ``Delta E_b(t) = E_a(t) (x) E_{b-a}(t)`` coefficientwise up to ``order``."""
    c = b - a
    if not (a.is_nonnegative() and c.is_nonnegative()):
        raise ValueError(f"{a} is not a summand of {b}")
    names = (
        [f"xa{i}" for i in range(1, a.m + 1)] + [f"xc{i}" for i in range(1, c.m + 1)]
        + [f"ya{i}" for i in range(1, a.n + 1)] + [f"yc{i}" for i in range(1, c.n + 1)]
    ) or ["_dummy"]
    R, *gens = ring(",".join(names), sp.ZZ)
    gens = gens if b.m + b.n else []
    xa, gens = gens[: a.m], gens[a.m:]
    xc, gens = gens[: c.m], gens[c.m:]
    ya, yc = gens[: a.n], gens[a.n:]

    def split(first, second, k):
        # e_k of the joint variable set, expanded by the coproduct
        def e(seq, i):
            return R.one if i == 0 else (seq[i - 1] if i <= len(seq) else R.zero)

        return sum((e(first, i) * e(second, k - i) for i in range(k + 1)), R.zero)

    big_x = [split(xa, xc, k) for k in range(1, b.m + 1)]
    big_y = [split(ya, yc, k) for k in range(1, b.n + 1)]
    lhs = _series(big_x, big_y, R.one, order)
    left = _series(xa, ya, R.one, order)
    right = _series(xc, yc, R.one, order)
    rhs = [sum((left[i] * right[k - i] for i in range(k + 1)), R.zero) for k in range(order + 1)]
    return lhs == rhs


def factorial_guard(r: int, limit: int) -> None:
    if r > limit:
        raise RankGuardError(f"rank {r} exceeds guard {limit} ({math.factorial(r)} permutations)")

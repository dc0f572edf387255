"""Equivariant K-theory of the nilpotent cone of ``gl_r``.

A class is stored as a numerator over the fixed symmetric denominator

    D_r = prod_{i != j} (1 - q^2 x_i / x_j),

and the numerator is kept in the basis of Weyl characters ``chi_lambda``
(``lambda`` dominant, entries possibly negative). Because the denominator is
fixed, equality of classes is equality of numerators and no polynomial gcd is
ever needed.

The Andersen-Jantzen class is the localization sum

    A(lambda) = sum_{w in S_r} w( x^lambda prod_{i<j} (1 - x_j/x_i)^-1 (1 - q^2 x_i/x_j)^-1 ).

Multiplying by ``D_r`` and expanding ``prod_{i<j} (1 - q^2 x_j/x_i)`` over
subsets of pairs turns it into a signed sum of Weyl characters, obtained by
straightening exponent vectors (sort with sign, drop repeats, subtract the
staircase). The induction product uses the same trick on the cross pairs.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence

import sympy as sp

from ._exact import NotInSpan, from_field, independent_rows, solve_square
from .conventions import DEFAULT, Conventions
from .kostant import enumerate_lambda, is_dominant
from .qlaurent import ONE, LaurentQ
from .roots import DimVector
from .symfun import RationalSymExpr, q, ssyt, xs

__all__ = [
    "KClass",
    "aj_class",
    "delta_shift",
    "delta_shift_bruteforce",
    "proper_standard_class",
    "proper_costandard_class",
    "induction_product",
    "monoidal_product",
    "expand_in_proper_standards",
    "weyl_character_monomials",
    "nilcone_graded_character",
    "RankGuardError",
    "MAX_RANK",
]

MAX_RANK = 5
Weight = tuple[int, ...]


class RankGuardError(ValueError):
    """Rank exceeds :data:`MAX_RANK`."""


def _guard(r: int) -> None:
    if r > MAX_RANK:
        raise RankGuardError(f"rank {r} exceeds the guard {MAX_RANK}")


def _straighten(exps: Sequence[int]) -> tuple[int, Weight] | None:
    """``a_kappa / a_delta = sign * chi_mu``; ``None`` when ``kappa`` has a repeat."""
    r = len(exps)
    if len(set(exps)) < r:
        return None
    order = sorted(range(r), key=lambda i: -exps[i])
    # sign of the sorting permutation via inversion count
    inv = sum(1 for i in range(r) for j in range(i + 1, r) if order[i] > order[j])
    mu = tuple(exps[order[k]] - (r - 1 - k) for k in range(r))
    return (-1 if inv % 2 else 1), mu


class KClass:
    """A K-class of rank ``r``: ``sum_lambda c_lambda chi_lambda / D_r``."""

    __slots__ = ("rank", "_num")

    def __init__(self, rank: int, numerator: Mapping[Weight, LaurentQ] | None = None):
        clean = {}
        for lam, c in (numerator or {}).items():
            lam = tuple(lam)
            if len(lam) != rank or not is_dominant(lam):
                raise ValueError(f"{lam} is not a dominant weight of length {rank}")
            if not isinstance(c, LaurentQ):
                c = LaurentQ(c)
            if c:
                clean[lam] = c
        self.rank = rank
        self._num = clean

    @classmethod
    def unit(cls) -> "KClass":
        return cls(0, {(): ONE})

    @property
    def numerator(self) -> dict[Weight, LaurentQ]:
        return dict(self._num)

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        if not self._num and not other._num:
            return True
        return self.rank == other.rank and self._num == other._num

    def __hash__(self):
        return hash((self.rank, frozenset(self._num.items())))

    def __bool__(self) -> bool:
        return bool(self._num)

    def _check(self, other: "KClass"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch {self.rank} vs {other.rank}")

    def __add__(self, other: "KClass") -> "KClass":
        self._check(other)
        acc = dict(self._num)
        for lam, c in other._num.items():
            acc[lam] = acc.get(lam, LaurentQ()) + c
        return KClass(self.rank, acc)

    def __neg__(self) -> "KClass":
        return KClass(self.rank, {lam: -c for lam, c in self._num.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, c: LaurentQ | int) -> "KClass":
        return KClass(self.rank, {lam: v * c for lam, v in self._num.items()})

    def shift(self, k: int) -> "KClass":
        """Multiply by ``q^k``."""
        return KClass(self.rank, {lam: v.shift(k) for lam, v in self._num.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentQ)):
            return self.scale(c)
        return NotImplemented

    # -- views ------------------------------------------------------------------

    def denominator_expr(self) -> sp.Expr:
        v = xs(self.rank)
        return sp.Mul(*[1 - q**2 * v[i] / v[j] for i in range(self.rank) for j in range(self.rank) if i != j])

    def numerator_expr(self) -> sp.Expr:
        v = xs(self.rank)
        total = sp.Integer(0)
        for lam, c in self._num.items():
            poly = sum(cnt * sp.Mul(*[v[i] ** e for i, e in enumerate(mono)])
                       for mono, cnt in weyl_character_monomials(lam).items())
            total += sum(k * q**e for e, k in c.items()) * poly
        return total

    def to_rational(self) -> RationalSymExpr:
        return RationalSymExpr(self.numerator_expr() / self.denominator_expr(), self.rank)

    def at_q_zero(self) -> dict[Weight, int]:
        """The ``q = 0`` value as a character ``{monomial exponent: multiplicity}``."""
        acc: dict[Weight, int] = {}
        for lam, c in self._num.items():
            if c and c.valuation() < 0:
                raise ValueError("class has a pole at q = 0")
            c0 = c[0]
            if c0:
                for mono, cnt in weyl_character_monomials(lam).items():
                    acc[mono] = acc.get(mono, 0) + c0 * cnt
        return {k: v for k, v in acc.items() if v}

    def series(self, order: int) -> dict[tuple[Weight, int], int]:
        """Expansion ``{(x-exponent, q-exponent): coefficient}`` up to ``q^order``."""
        r = self.rank
        num: dict[tuple[Weight, int], int] = {}
        for lam, c in self._num.items():
            chars = weyl_character_monomials(lam)
            for e, k in c.items():
                if e > order:
                    continue
                for mono, cnt in chars.items():
                    key = (mono, e)
                    num[key] = num.get(key, 0) + k * cnt
        # multiply by 1/(1 - q^2 x_i/x_j) for each ordered pair, truncating
        for i in range(r):
            for j in range(r):
                if i == j:
                    continue
                step = [0] * r
                step[i], step[j] = 1, -1
                out: dict[tuple[Weight, int], int] = {}
                for (mono, e), k in num.items():
                    a = 0
                    while e + 2 * a <= order:
                        key = (tuple(m + a * s for m, s in zip(mono, step)), e + 2 * a)
                        out[key] = out.get(key, 0) + k
                        a += 1
                num = out
        return {key: v for key, v in num.items() if v}

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "num": str(sp.expand(self.numerator_expr())),
            "den": str(self.denominator_expr()),
            "numerator": {",".join(map(str, lam)): c.to_json() for lam, c in sorted(self._num.items())},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "KClass":
        # num/den are for human readers; the character map is authoritative
        num = {tuple(int(x) for x in key.split(",")) if key else (): LaurentQ.from_json(c)
               for key, c in data["numerator"].items()}
        return cls(int(data["rank"]), num)

    def __str__(self) -> str:
        if not self._num:
            return "0"
        body = " + ".join(f"({c})*chi{list(lam)}" for lam, c in sorted(self._num.items(), reverse=True))
        return f"[{body}] / D_{self.rank}"

    def __repr__(self) -> str:
        return f"KClass({self})"


def weyl_character_monomials(lam: Sequence[int]) -> dict[Weight, int]:
    """Monomial expansion of the Weyl character ``chi_lambda`` of ``GL_r``."""
    lam = tuple(lam)
    r = len(lam)
    if r == 0:
        return {(): 1}
    base = lam[-1]
    shape = [a - base for a in lam]
    out: dict[Weight, int] = {}
    for tab in ssyt(shape, r):
        exp = [base] * r
        for row in tab:
            for v in row:
                exp[v - 1] += 1
        key = tuple(exp)
        out[key] = out.get(key, 0) + 1
    return out


def _subset_sum(r: int, pairs: Sequence[tuple[int, int]], exps: Sequence[int], coeff: LaurentQ,
                acc: dict[Weight, LaurentQ]) -> None:
    """Add ``coeff * sum_S (-q^2)^|S| straighten(exps + sum_{(i,j) in S} (e_j - e_i))``."""
    for size in range(len(pairs) + 1):
        sign_q = LaurentQ.monomial(2 * size, -1 if size % 2 else 1) * coeff
        for subset in itertools.combinations(pairs, size):
            kappa = list(exps)
            for i, j in subset:
                kappa[i] -= 1
                kappa[j] += 1
            st = _straighten(kappa)
            if st is None:
                continue
            sign, mu = st
            term = sign_q if sign > 0 else -sign_q
            acc[mu] = acc[mu] + term if mu in acc else term


def aj_class(lam: Sequence[int], r: int | None = None) -> KClass:
    """Andersen-Jantzen class ``A(lambda)`` for any integer vector ``lambda``.

    >>> str(aj_class((0, 0)))
    '[(1 + q^2)*chi[0, 0]] / D_2'
    """
    lam = tuple(lam)
    r = len(lam) if r is None else r
    if len(lam) != r:
        raise ValueError(f"weight {lam} does not have length {r}")
    _guard(r)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    exps = [lam[i] + r - 1 - i for i in range(r)]
    acc: dict[Weight, LaurentQ] = {}
    _subset_sum(r, pairs, exps, ONE, acc)
    return KClass(r, acc)


def delta_shift(lam: Sequence[int]) -> int:
    """``r(r-1)/2 - sum_k p_k(p_k-1)/2`` for a dominant weight with part multiplicities ``p_k``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    r = len(lam)
    return r * (r - 1) // 2 - sum(lam.count(v) * (lam.count(v) - 1) // 2 for v in set(lam))


def delta_shift_bruteforce(lam: Sequence[int]) -> int:
    """Minimal length of ``w`` in ``S_r`` with ``w w_0 lambda`` dominant."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    rev = lam[::-1]
    best = None
    for perm in itertools.permutations(range(len(lam))):
        # (w v)_i = v_{w^-1(i)}; permuting positions is enough for the minimum
        image = tuple(rev[perm[i]] for i in range(len(lam)))
        if is_dominant(image):
            length = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
            best = length if best is None else min(best, length)
    return best


def _check_lambda(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_dominant(lam) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not in Lambda_beta (dominant, nonnegative)")
    return lam


def proper_standard_class(lam: Sequence[int], conventions: Conventions = DEFAULT) -> KClass:
    """``q^(s * delta_lambda) A(w_0 lambda)`` with ``s`` the frozen shift sign."""
    lam = _check_lambda(lam)
    return aj_class(lam[::-1]).shift(conventions.shift_sign * delta_shift(lam))


def proper_costandard_class(lam: Sequence[int], conventions: Conventions = DEFAULT) -> KClass:
    """``q^(-s * delta_lambda) A(lambda)``."""
    lam = _check_lambda(lam)
    return aj_class(lam).shift(-conventions.shift_sign * delta_shift(lam))


def induction_product(f: KClass, g: KClass) -> KClass:
    """Parabolic induction ``f o g`` from ``GL_u x GL_v`` to ``GL_{u+v}``.

    The coset sum over ``S_{u+v}/(S_u x S_v)`` of the cross factor
    ``prod_{i<=u<j} (1 - x_j/x_i)^-1 (1 - q^2 x_i/x_j)^-1`` becomes, after
    clearing ``D_{u+v}``, a straightening sum over subsets of the cross pairs.
    """
    u, v = f.rank, g.rank
    r = u + v
    _guard(r)
    pairs = [(i, j) for i in range(u) for j in range(u, r)]
    stair = [r - 1 - i for i in range(r)]
    acc: dict[Weight, LaurentQ] = {}
    for lam, c in f._num.items():
        for mu, d in g._num.items():
            exps = [a + s for a, s in zip(lam + mu, stair)]
            _subset_sum(r, pairs, exps, c * d, acc)
    return KClass(r, acc)


def monoidal_product(f: KClass, g: KClass, conventions: Conventions = DEFAULT) -> KClass:
    """Induction product twisted by ``q^(twist * u * v)``."""
    return induction_product(f, g).shift(conventions.twist * f.rank * g.rank)


def expand_in_proper_standards(c: KClass, b: DimVector,
                               conventions: Conventions = DEFAULT) -> dict[Weight, LaurentQ]:
    """Exact coefficients of ``c`` on ``{proper_standard_class(lambda) : lambda in Lambda_b}``."""
    basis = enumerate_lambda(b)
    if not c:
        return {}
    if c.rank != b.rank:
        raise ValueError(f"class of rank {c.rank} cannot lie over {b}")
    vectors = [proper_standard_class(lam, conventions) for lam in basis]
    keys = set(c._num)
    for vec in vectors:
        keys.update(vec._num)
    keys = sorted(keys, reverse=True)
    columns = [[vec._num.get(k, LaurentQ()) for k in keys] for vec in vectors]
    rows = independent_rows(columns)
    matrix = [[vec._num.get(keys[i], LaurentQ()) for vec in vectors] for i in rows]
    rhs = [c._num.get(keys[i], LaurentQ()) for i in rows]
    coeffs = [from_field(x) for x in solve_square(matrix, rhs)]
    residual = c
    for coeff, vec in zip(coeffs, vectors):
        if coeff:
            residual = residual - vec.scale(coeff)
    if residual:
        raise NotInSpan(f"residual {residual} after solving")
    return {lam: coeff for lam, coeff in zip(basis, coeffs) if coeff}


def nilcone_graded_character(r: int, order: int) -> dict[tuple[Weight, int], int]:
    """Graded torus character of ``C[N_r]`` up to ``q^order``, by monomial counting.

    A Groebner basis of the ideal generated by the coefficients of the
    characteristic polynomial of the generic ``r x r`` matrix gives the
    standard monomials; the entry ``X_ij`` carries torus weight ``x_i/x_j``
    and ``q``-degree 2.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    entries = [[sp.Symbol(f"X{i}{j}") for j in range(r)] for i in range(r)]
    flat = [e for row in entries for e in row]
    t = sp.Symbol("t")
    charpoly = sp.Matrix(entries).charpoly(t).as_expr()
    gens = [sp.expand(charpoly.coeff(t, k)) for k in range(r)]
    gb = sp.groebner(gens, *flat, order="grevlex")
    leads = [sp.Poly(g, *flat).monoms(order="grevlex")[0] for g in gb.exprs]
    out: dict[tuple[Weight, int], int] = {}
    nvar = len(flat)
    for deg in range(order // 2 + 1):
        for combo in itertools.combinations_with_replacement(range(nvar), deg):
            mono = [0] * nvar
            for k in combo:
                mono[k] += 1
            if any(all(m >= l for m, l in zip(mono, lead)) for lead in leads):
                continue
            wt = [0] * r
            for k, power in enumerate(mono):
                i, j = divmod(k, r)
                wt[i] += power
                wt[j] -= power
            key = (tuple(wt), 2 * deg)
            out[key] = out.get(key, 0) + 1
    return out


def lambda_basis(b: DimVector) -> list[Weight]:
    return enumerate_lambda(b)

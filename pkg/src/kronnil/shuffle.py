"""Quantum shuffle algebra on the letters 0, 1 of the Kronecker quiver.

Words are tuples of letters; letter ``0`` has weight ``alpha_0`` and letter
``1`` has weight ``alpha_1``. The product of two words sums over all
interleavings, each weighted by ``q^(-c * (alpha_a, alpha_b))`` for every
letter ``b`` of the right factor that ends up *before* a letter ``a`` of the
left factor (``c`` is the frozen crossing sign). With ``c = 1``::

    (0) * (1) = (0,1) + q^2 (1,0)
    (0) * (0) = (1 + q^-2) (0,0)

The dual root vectors ``E*(beta_n)`` are obtained by q-bracketing a Lyndon
word along its standard factorization, and products are expanded in the dual
PBW basis by an exact linear solve.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from ._exact import NonLaurentCoefficient, NotInSpan, from_field, independent_rows, solve_square
from .conventions import DEFAULT, Conventions
from .kostant import KostantPartition, enumerate_gamma, kp_stats
from .qlaurent import ONE, LaurentQ
from .roots import DimVector, pairing

__all__ = [
    "ShuffleElement",
    "ShuffleAlgebra",
    "ConventionError",
    "NotInSpan",
    "NonLaurentCoefficient",
    "word_weight",
    "is_lyndon",
    "standard_factorization",
    "words_of_weight",
]

Word = tuple[int, ...]

# (alpha_a, alpha_b) for letters a, b
_FORM = ((2, -2), (-2, 2))


class ConventionError(RuntimeError):
    """The chosen conventions make a root vector degenerate."""


def word_weight(w: Iterable[int]) -> DimVector:
    w = tuple(w)
    return DimVector(w.count(1), w.count(0))


class ShuffleElement:
    """A weight-homogeneous combination of words with ``LaurentQ`` coefficients."""

    __slots__ = ("weight", "_terms")

    def __init__(self, terms: Mapping[Word, LaurentQ] | None = None, weight: DimVector | None = None):
        clean: dict[Word, LaurentQ] = {}
        for w, c in (terms or {}).items():
            if not isinstance(c, LaurentQ):
                c = LaurentQ(c)
            if c:
                clean[tuple(w)] = c
        if weight is None:
            if not clean:
                raise ValueError("weight is required for the zero element")
            weight = word_weight(next(iter(clean)))
        for w in clean:
            if word_weight(w) != weight:
                raise ValueError(f"word {w} does not have weight {weight}")
        self.weight = weight
        self._terms = clean

    @classmethod
    def word(cls, w: Iterable[int], coeff: LaurentQ | int = 1) -> "ShuffleElement":
        w = tuple(w)
        return cls({w: coeff}, word_weight(w))

    @classmethod
    def zero(cls, weight: DimVector) -> "ShuffleElement":
        return cls({}, weight)

    @classmethod
    def one(cls) -> "ShuffleElement":
        return cls({(): ONE}, DimVector(0, 0))

    @property
    def terms(self) -> dict[Word, LaurentQ]:
        return dict(self._terms)

    def __getitem__(self, w: Word) -> LaurentQ:
        return self._terms.get(tuple(w), LaurentQ())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def support(self) -> list[Word]:
        return sorted(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ShuffleElement):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.weight == other.weight and self._terms == other._terms

    def __hash__(self):
        return hash((self.weight, frozenset(self._terms.items())))

    def _check(self, other: "ShuffleElement"):
        if self.weight != other.weight:
            raise ValueError(f"weights differ: {self.weight} vs {other.weight}")

    def __add__(self, other: "ShuffleElement") -> "ShuffleElement":
        self._check(other)
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, LaurentQ()) + c
        return ShuffleElement(acc, self.weight)

    def __neg__(self) -> "ShuffleElement":
        return ShuffleElement({w: -c for w, c in self._terms.items()}, self.weight)

    def __sub__(self, other: "ShuffleElement") -> "ShuffleElement":
        return self + (-other)

    def scale(self, c: LaurentQ | int) -> "ShuffleElement":
        return ShuffleElement({w: v * c for w, v in self._terms.items()}, self.weight)

    def __rmul__(self, c):
        if isinstance(c, (int, LaurentQ)):
            return self.scale(c)
        return NotImplemented

    def evaluate(self, value) -> dict[Word, object]:
        return {w: c.evaluate(value) for w, c in self._terms.items()}

    def to_json(self) -> dict[str, dict[str, str]]:
        return {"".join(map(str, w)): c.to_json() for w, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, Mapping[str, str]], weight: DimVector) -> "ShuffleElement":
        return cls({tuple(int(ch) for ch in w): LaurentQ.from_json(c) for w, c in data.items()}, weight)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*[{''.join(map(str, w))}]" for w, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"ShuffleElement({self})"


def words_of_weight(weight: DimVector) -> list[Word]:
    """All words with ``m`` zeros and ``n`` ones."""
    length = weight.n + weight.m
    out = []
    for ones in combinations(range(length), weight.n):
        w = [0] * length
        for i in ones:
            w[i] = 1
        out.append(tuple(w))
    return out


def is_lyndon(w: Word, rank: Mapping[int, int]) -> bool:
    """Strictly smaller than each proper rotation under the letter ranking."""
    key = tuple(rank[a] for a in w)
    return bool(w) and all(key < key[i:] + key[:i] for i in range(1, len(w)))


def standard_factorization(w: Word, rank: Mapping[int, int]) -> tuple[Word, Word]:
    """Split a Lyndon word as ``u v`` with ``v`` its longest proper Lyndon suffix."""
    for i in range(1, len(w)):
        if _is_lyndon_suffix(w[i:], rank):
            return w[:i], w[i:]
    raise ValueError(f"{w} has no standard factorization")


def _is_lyndon_suffix(v: Word, rank: Mapping[int, int]) -> bool:
    key = tuple(rank[a] for a in v)
    return all(key < key[i:] for i in range(1, len(v)))


@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word, crossing: int) -> dict[Word, LaurentQ]:
    if not u:
        return {v: ONE}
    if not v:
        return {u: ONE}
    out: dict[Word, LaurentQ] = {}
    # last letter taken from v: no crossing with letters of u
    for w, c in _shuffle_words(u, v[:-1], crossing).items():
        out[w + v[-1:]] = c
    a = u[-1]
    e = -crossing * sum(_FORM[a][b] for b in v)
    for w, c in _shuffle_words(u[:-1], v, crossing).items():
        key = w + (a,)
        c = c.shift(e)
        out[key] = out[key] + c if key in out else c
    return {w: c for w, c in out.items() if c}


class ShuffleAlgebra:
    """Products, root vectors and dual PBW expansions under fixed conventions.

    ``cache_dir`` (optional) stores computed dual root vectors as JSON files
    keyed by index and convention hash.
    """

    def __init__(self, conventions: Conventions = DEFAULT, cache_dir: str | Path | None = None):
        self.conventions = conventions
        self.rank = {a: i for i, a in enumerate(conventions.letter_order)}
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self._root_vectors: dict[int, ShuffleElement] = {}

    # -- products ---------------------------------------------------------

    def product(self, a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
        acc: dict[Word, LaurentQ] = {}
        c = self.conventions.crossing
        for u, cu in a._terms.items():
            for v, cv in b._terms.items():
                cuv = cu * cv
                for w, cw in _shuffle_words(u, v, c).items():
                    term = cw * cuv
                    acc[w] = acc[w] + term if w in acc else term
        return ShuffleElement(acc, a.weight + b.weight)

    def power(self, a: ShuffleElement, k: int) -> ShuffleElement:
        out = ShuffleElement.one()
        for _ in range(k):
            out = self.product(out, a)
        return out

    def q_bracket(self, a: ShuffleElement, b: ShuffleElement) -> ShuffleElement:
        """``a*b - q^(-c*(wt a, wt b)) b*a``."""
        e = -self.conventions.crossing * pairing(a.weight, b.weight)
        return self.product(a, b) - self.product(b, a).scale(LaurentQ.monomial(e))

    # -- Lyndon words -------------------------------------------------------

    def word_key(self, w: Word) -> tuple[int, ...]:
        return tuple(self.rank[a] for a in w)

    def lyndon_words(self, weight: DimVector) -> list[Word]:
        return sorted((w for w in words_of_weight(weight) if is_lyndon(w, self.rank)), key=self.word_key)

    def bracket(self, w: Word) -> ShuffleElement:
        """Iterated q-bracket along the standard factorization."""
        return self._bracket(tuple(w))

    def _bracket(self, w: Word) -> ShuffleElement:
        if len(w) == 1:
            return ShuffleElement.word(w)
        u, v = standard_factorization(w, self.rank)
        return self.q_bracket(self._bracket(u), self._bracket(v))

    def max_word(self, x: ShuffleElement) -> Word:
        return max(x._terms, key=self.word_key)

    def good_lyndon_word(self, n: int) -> Word:
        """Largest Lyndon word of weight ``beta_n`` that is the maximal word of its bracket."""
        for w in reversed(self.lyndon_words(DimVector(n, n + 1))):
            b = self.bracket(w)
            if b and self.max_word(b) == w:
                return w
        raise ConventionError(f"no Lyndon word of weight beta_{n} survives bracketing")

    # -- dual root vectors and PBW monomials ------------------------------------

    def _cache_path(self, n: int) -> Path | None:
        if self.cache_dir is None:
            return None
        return self.cache_dir / f"rootvec-{n}-{self.conventions.hash}.json"

    def dual_root_vector(self, n: int) -> ShuffleElement:
        """``E*(beta_n)``: bracket of the good Lyndon word, scaled so that word has coefficient ``1 - q^-2``.

        >>> str(ShuffleAlgebra().dual_root_vector(0))
        '(-q^-2 + 1)*[0]'
        """
        if n < 0:
            raise ValueError("root index must be nonnegative")
        if n in self._root_vectors:
            return self._root_vectors[n]
        weight = DimVector(n, n + 1)
        path = self._cache_path(n)
        if path is not None and path.exists():
            vec = ShuffleElement.from_json(json.loads(path.read_text(encoding="utf-8")), weight)
        else:
            vec = self._compute_root_vector(n)
            if path is not None:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(json.dumps(vec.to_json(), sort_keys=True) + "\n", encoding="utf-8")
        self._root_vectors[n] = vec
        return vec

    def _compute_root_vector(self, n: int) -> ShuffleElement:
        w = self.good_lyndon_word(n)
        b = self.bracket(w)
        lead = b[w]
        try:
            terms = {v: c.divexact(lead) for v, c in b._terms.items()}
        except ValueError as exc:
            raise NonLaurentCoefficient(f"bracket of {w} is not divisible by its leading coefficient") from exc
        scale = LaurentQ({0: 1, -2: -1}).shift(self.conventions.unit(n))
        return ShuffleElement(terms, b.weight).scale(scale)

    def dual_pbw_monomial(self, pi: KostantPartition) -> ShuffleElement:
        """``q^(sum p_k(p_k-1)/2) E*(beta_l)^{p_l} ... E*(beta_0)^{p_0}``."""
        _, _, p = kp_stats(pi)
        out = ShuffleElement.one()
        for part in pi.parts:  # already in decreasing convex order
            out = self.product(out, self.dual_root_vector(part.index))
        shift = sum(pk * (pk - 1) // 2 for pk in p)
        return out.scale(LaurentQ.monomial(shift))

    # -- expansion ------------------------------------------------------------

    def expand_in_dual_pbw(self, x: ShuffleElement) -> dict[KostantPartition, LaurentQ]:
        """Exact coefficients of ``x`` in the dual PBW basis of its weight."""
        if not x.weight.in_qpp():
            raise ValueError(f"weight {x.weight} is outside the beta cone")
        basis = enumerate_gamma(x.weight)
        monomials = [self.dual_pbw_monomial(pi) for pi in basis]
        words = set(x._terms)
        for mono in monomials:
            words.update(mono._terms)
        words = sorted(words, key=self.word_key, reverse=True)  # max words first
        columns = [[mono[w] for w in words] for mono in monomials]
        rows = independent_rows(columns)
        matrix = [[mono[words[i]] for mono in monomials] for i in rows]
        rhs = [x[words[i]] for i in rows]
        coeffs = [from_field(c) for c in solve_square(matrix, rhs)]
        residual = x
        for c, mono in zip(coeffs, monomials):
            if c:
                residual = residual - mono.scale(c)
        if residual:
            raise NotInSpan(f"residual {residual} after solving")
        return {pi: c for pi, c in zip(basis, coeffs) if c}

    def ls_shape(self, n: int, m: int) -> tuple[bool, dict[KostantPartition, LaurentQ]]:
        """Levendorskii-Soibelman shape of ``E*(beta_n) E*(beta_m)`` for ``n < m``.

        The coefficient of ``(beta_m, beta_n)`` must be a unit ``+-q^k`` and every
        other term must sit strictly below it in the bilex order with all parts
        strictly between ``beta_n`` and ``beta_m``.
        """
        from .kostant import bilex_leq

        if not n < m:
            raise ValueError("need n < m")
        x = self.product(self.dual_root_vector(n), self.dual_root_vector(m))
        expansion = self.expand_in_dual_pbw(x)
        top = KostantPartition.from_multiplicities([1 if k in (n, m) else 0 for k in range(m + 1)])
        ok = expansion.get(top, LaurentQ()).is_unit()
        for pi, c in expansion.items():
            if pi == top:
                continue
            inside = all(n < part.index < m for part in pi.parts)
            ok = ok and inside and bilex_leq(pi, top) and pi != top
        return ok, expansion

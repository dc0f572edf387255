"""Kostant partitions, the bilexicographic order and the weights ``Lambda_beta``.

A Kostant partition of ``beta`` is a decreasing tuple of positive roots
summing to ``beta``. Since all imaginary roots are equivalent in the convex
preorder, the ``k*delta`` parts are kept as a partition (decreasing ``k``) in
the middle of the tuple. The subset ``Gamma_beta`` consists of partitions
supported on the ``beta_k`` only; these are in bijection with dominant weights

    lambda_pi = (l^{p_l}, ..., 1^{p_1}, 0^{p_0})

where ``p_k`` is the multiplicity of ``beta_k``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cmp_to_key

from .roots import DimVector, Root, beta, delta, positive_roots

__all__ = [
    "KostantPartition",
    "Weight",
    "rho",
    "bilex_leq",
    "left_lex_cmp",
    "right_lex_cmp",
    "enumerate_gamma",
    "enumerate_kostant",
    "enumerate_lambda",
    "kp_stats",
    "kp_to_weight",
    "weight_to_kp",
    "is_dominant",
    "dominance_leq",
    "parse_kp",
]

Weight = tuple[int, ...]


@dataclass(frozen=True)
class KostantPartition:
    """A weakly decreasing tuple of positive roots.

    Use :meth:`from_parts` to build one from roots in any order.
    """

    parts: tuple[Root, ...]

    def __post_init__(self):
        keys = [p.sort_key() for p in self.parts]
        if any(a < b for a, b in zip(keys, keys[1:])):
            raise ValueError("parts must be weakly decreasing in the convex order")

    @classmethod
    def from_parts(cls, parts: Iterable[Root]) -> "KostantPartition":
        return cls(tuple(sorted(parts, key=Root.sort_key, reverse=True)))

    @classmethod
    def from_multiplicities(cls, p: Sequence[int]) -> "KostantPartition":
        """Build ``((beta_l)^{p_l}, ..., (beta_0)^{p_0})`` from ``[p_0, ..., p_l]``."""
        parts = [beta(k) for k in range(len(p) - 1, -1, -1) for _ in range(p[k])]
        return cls(tuple(parts))

    @property
    def weight(self) -> DimVector:
        total = DimVector(0, 0)
        for p in self.parts:
            total = total + p.dim
        return total

    def in_gamma(self) -> bool:
        return all(p.kind == "b" for p in self.parts)

    def imaginary_partition(self) -> tuple[int, ...]:
        return tuple(p.index for p in self.parts if p.kind == "d")

    @property
    def token(self) -> str:
        """CLI form, e.g. ``"b2^1,b0^3"``."""
        if not self.parts:
            return ""
        runs: list[list] = []
        for p in self.parts:
            if runs and runs[-1][0] == p:
                runs[-1][1] += 1
            else:
                runs.append([p, 1])
        return ",".join(f"{p.token}^{k}" for p, k in runs)

    def __str__(self) -> str:
        return "(" + ", ".join(p.token for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"KostantPartition({self.token!r})"


def parse_kp(text: str) -> KostantPartition:
    """Parse ``"b2^1,b0^3"`` or ``"b2,b0,b0,b0"``."""
    from .roots import parse_root

    parts: list[Root] = []
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        tok, _, mult = chunk.partition("^")
        parts.extend([parse_root(tok)] * (int(mult) if mult else 1))
    return KostantPartition.from_parts(parts)


def rho(pi: KostantPartition) -> KostantPartition:
    """Replace each ``k*delta`` by ``k`` copies of ``delta``."""
    parts: list[Root] = []
    for p in pi.parts:
        parts.extend([delta(1)] * p.index if p.kind == "d" else [p])
    return KostantPartition(tuple(parts))


def _lex_cmp(a: Sequence[Root], b: Sequence[Root]) -> int:
    for x, y in zip(a, b):
        kx, ky = x.convex_key(), y.convex_key()
        if kx != ky:
            return -1 if kx < ky else 1
    return (len(a) > len(b)) - (len(a) < len(b))


def left_lex_cmp(pi: KostantPartition, sigma: KostantPartition) -> int:
    """Three-way left lexicographic comparison of root partitions."""
    return _lex_cmp(rho(pi).parts, rho(sigma).parts)


def right_lex_cmp(pi: KostantPartition, sigma: KostantPartition) -> int:
    """Three-way right lexicographic comparison (read from the last part)."""
    return _lex_cmp(rho(pi).parts[::-1], rho(sigma).parts[::-1])


def bilex_leq(pi: KostantPartition, sigma: KostantPartition) -> bool:
    """``pi <= sigma`` iff ``rho(pi) <=_l rho(sigma)`` and ``rho(pi) >=_r rho(sigma)``."""
    if pi.weight != sigma.weight:
        raise ValueError(f"weight mismatch: {pi.weight} vs {sigma.weight}")
    return left_lex_cmp(pi, sigma) <= 0 and right_lex_cmp(pi, sigma) >= 0


def kp_stats(pi: KostantPartition) -> tuple[int, int, list[int]]:
    """Return ``(n_pi, r_pi, [p_0, p_1, ..., p_l])``."""
    if not pi.in_gamma():
        raise ValueError(f"{pi} has parts outside the beta family")
    counts = Counter(p.index for p in pi.parts)
    top = max(counts, default=-1)
    p = [counts.get(k, 0) for k in range(top + 1)]
    n = sum(k * pk for k, pk in enumerate(p))
    return n, sum(p), p


def enumerate_gamma(b: DimVector) -> list[KostantPartition]:
    """All Kostant partitions of ``b`` supported on ``beta_0, beta_1, ...``.

    Listed in decreasing left lexicographic order. Each part ``beta_k``
    contributes one to the rank ``m - n`` and ``k`` to the delta count, so
    we search for decreasing index sequences of length ``r`` summing to ``n``.
    """
    if not b.in_qpp():
        raise ValueError(f"{b} is not in the cone spanned by the beta roots")
    r, n = b.rank, b.n
    out: list[KostantPartition] = []

    def rec(prefix: list[int], slots: int, remaining: int, cap: int):
        if slots == 0:
            if remaining == 0:
                out.append(KostantPartition(tuple(beta(k) for k in prefix)))
            return
        for k in range(min(cap, remaining), -1, -1):
            rec(prefix + [k], slots - 1, remaining - k, k)

    rec([], r, n, n)
    return out


def enumerate_kostant(b: DimVector) -> list[KostantPartition]:
    """All Kostant partitions of an arbitrary nonnegative ``b``."""
    roots = sorted(positive_roots(b.height), key=Root.sort_key, reverse=True)
    out: list[KostantPartition] = []

    def rec(start: int, rest: DimVector, acc: list[Root]):
        if rest.n == 0 and rest.m == 0:
            out.append(KostantPartition(tuple(acc)))
            return
        for i in range(start, len(roots)):
            d = roots[i].dim
            if d.n <= rest.n and d.m <= rest.m:
                rec(i, rest - d, acc + [roots[i]])

    rec(0, b, [])
    return out


def is_dominant(lam: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:]))


def enumerate_lambda(b: DimVector) -> list[Weight]:
    """Dominant weights of length ``r`` with entries ``>= 0`` summing to ``n``."""
    if not b.in_qpp():
        raise ValueError(f"{b} is not in the cone spanned by the beta roots")
    r, n = b.rank, b.n
    out: list[Weight] = []

    def rec(prefix: tuple[int, ...], cap: int, remaining: int):
        if len(prefix) == r:
            if remaining == 0:
                out.append(prefix)
            return
        for k in range(min(cap, remaining), -1, -1):
            rec(prefix + (k,), k, remaining - k)

    rec((), n, n)
    return out


def kp_to_weight(pi: KostantPartition) -> Weight:
    """The dominant weight ``lambda_pi``."""
    if not pi.in_gamma():
        raise ValueError(f"{pi} is not in Gamma_beta")
    return tuple(p.index for p in pi.parts)


def weight_to_kp(lam: Sequence[int]) -> KostantPartition:
    """Inverse of :func:`kp_to_weight`."""
    lam = tuple(lam)
    if not is_dominant(lam) or (lam and lam[-1] < 0):
        raise ValueError(f"{lam} is not a dominant nonnegative weight")
    return KostantPartition(tuple(beta(k) for k in lam))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every partial sum of ``lam`` is at most that of ``mu``."""
    if len(lam) != len(mu):
        raise ValueError("weights of different length")
    if sum(lam) != sum(mu):
        raise ValueError("weights with different entry sums")
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a > b:
            return False
    return True


def sort_bilex(kps: Iterable[KostantPartition]) -> list[KostantPartition]:
    """A linear extension of the bilex order (left lex suffices)."""
    return sorted(kps, key=cmp_to_key(left_lex_cmp))

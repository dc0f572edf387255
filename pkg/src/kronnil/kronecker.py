"""Module types of the Kronecker quiver and the degeneration order.

Indecomposables are the preprojectives ``P_k`` (dimension ``beta_k``), the
preinjectives ``I_k`` (dimension ``gamma_k``) and the regular modules
``R_{k,z}`` (dimension ``(k+1)*delta``) attached to a point ``z`` of the
projective line. Here ``z`` is an abstract label.

For a sequence of multiplicities ``a = (a_0, a_1, ...)`` we write
``a_{>=j} = a_j + a_{j+1} + ...``; the degeneration criterion compares the
tail vectors ``(a_{>=0}, a_{>=1}, ...)`` shifted by the rank, in dominance.
"""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from itertools import product

from .kostant import KostantPartition, dominance_leq, kp_stats, kp_to_weight
from .roots import DimVector

__all__ = [
    "KModuleType",
    "preprojective_type",
    "degeneration_leq",
    "closure_leq_preprojective",
    "tails",
    "shifted_dominance_leq",
    "enumerate_module_types",
]


def _trim(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    while seq and seq[-1] == 0:
        seq.pop()
    if any(x < 0 for x in seq):
        raise ValueError("multiplicities must be nonnegative")
    return tuple(seq)


def tails(mult: Sequence[int], length: int) -> list[int]:
    """``[a_{>=0}, a_{>=1}, ..., a_{>=length-1}]``."""
    out = []
    for j in range(length):
        out.append(sum(mult[j:]))
    return out


@dataclass(frozen=True)
class KModuleType:
    """Isomorphism type ``sum p_k P_k + sum i_k I_k + sum r_{k,z} R_{k,z}``."""

    p: tuple[int, ...] = ()
    i: tuple[int, ...] = ()
    regular: tuple[tuple[str, tuple[int, ...]], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "p", _trim(self.p))
        object.__setattr__(self, "i", _trim(self.i))
        reg = self.regular.items() if isinstance(self.regular, Mapping) else self.regular
        cleaned = tuple(sorted((str(z), _trim(r)) for z, r in reg if any(r)))
        if len({z for z, _ in cleaned}) != len(cleaned):
            raise ValueError("duplicate regular point label")
        object.__setattr__(self, "regular", cleaned)
        if self.rank_from_n != self.rank_from_m:
            raise AssertionError("rank identity failed")  # cannot happen for valid data

    @property
    def dim(self) -> DimVector:
        n = m = 0
        for k, c in enumerate(self.p):
            n, m = n + c * k, m + c * (k + 1)
        for k, c in enumerate(self.i):
            n, m = n + c * (k + 1), m + c * k
        for _, r in self.regular:
            for k, c in enumerate(r):
                n, m = n + c * (k + 1), m + c * (k + 1)
        return DimVector(n, m)

    @property
    def rank_from_n(self) -> int:
        return self.dim.n - sum(self.i)

    @property
    def rank_from_m(self) -> int:
        return self.dim.m - sum(self.p)

    @property
    def rank(self) -> int:
        return self.rank_from_n

    def regular_at(self, z: str) -> tuple[int, ...]:
        return dict(self.regular).get(z, ())

    def max_index(self) -> int:
        seqs = [self.p, self.i] + [r for _, r in self.regular]
        return max((len(s) - 1 for s in seqs if s), default=-1)

    def to_json(self) -> dict:
        return {"p": list(self.p), "i": list(self.i), "regular": {z: list(r) for z, r in self.regular}}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "KModuleType":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            tuple(data.get("p", ())),
            tuple(data.get("i", ())),
            tuple((z, tuple(r)) for z, r in data.get("regular", {}).items()),
        )


def preprojective_type(pi: KostantPartition) -> KModuleType:
    """The type of ``P_pi = sum_k p_k P_k``."""
    _, _, p = kp_stats(pi)
    return KModuleType(p=tuple(p))


def shifted_dominance_leq(a: Sequence[int], s: int, b: Sequence[int], t: int) -> bool:
    """Dominance ``a + s <= b + t`` for the infinite sequences ``(a_j + s)_j``.

    ``a`` and ``b`` are finite (zero beyond their length). Beyond the longest
    of them the partial-sum difference changes by ``s - t`` per step, so the
    comparison is decided by the finite prefix together with the sign of ``s - t``.
    """
    length = max(len(a), len(b))
    gap = 0  # partial sum of (b + t) - (a + s)
    for j in range(length):
        x = a[j] if j < len(a) else 0
        y = b[j] if j < len(b) else 0
        gap += (y + t) - (x + s)
        if gap < 0:
            return False
    return s <= t


def degeneration_leq(n_type: KModuleType, m_type: KModuleType) -> bool:
    """True iff ``N`` lies in the orbit closure of ``M``.

    Three conditions, with ``L`` large enough to hold every nonzero index::

        p_N + rho_N  <=  p_M + rho_M
        r_{N,z} + i_{N,>=0}  >=  r_{M,z} + i_{M,>=0}   for every label z
        i_N + rho_N  <=  i_M + rho_M

    where ``p_N`` denotes the tail vector of ``p`` and the scalar is added to
    every entry of the infinite sequence. Labels range over those present in
    either type plus one fresh label carrying no regular summands.
    """
    if n_type.dim != m_type.dim:
        raise ValueError(f"dimension mismatch: {n_type.dim} vs {m_type.dim}")
    length = 1 + max(n_type.max_index(), m_type.max_index(), 0)
    rn, rm = n_type.rank, m_type.rank
    if not shifted_dominance_leq(tails(n_type.p, length), rn, tails(m_type.p, length), rm):
        return False
    if not shifted_dominance_leq(tails(n_type.i, length), rn, tails(m_type.i, length), rm):
        return False
    i_n, i_m = sum(n_type.i), sum(m_type.i)
    labels = {z for z, _ in n_type.regular} | {z for z, _ in m_type.regular}
    fresh = "_fresh"
    while fresh in labels:
        fresh += "_"
    for z in sorted(labels) + [fresh]:
        rz_n = tails(n_type.regular_at(z), length)
        rz_m = tails(m_type.regular_at(z), length)
        if not shifted_dominance_leq(rz_m, i_m, rz_n, i_n):
            return False
    return True


def closure_leq_preprojective(pi: KostantPartition, sigma: KostantPartition) -> bool:
    """``Y_sigma`` lies in the closure of ``Y_pi``.

    Uses the transpose description: ``1 + lambda`` is the transpose of the
    tail vector ``p_{>=1}, p_{>=2}, ...`` together with ``p_{>=0} = r``, so the
    closure relation is dominance of tail vectors, ``p_sigma <= p_pi``.
    """
    if not (pi.in_gamma() and sigma.in_gamma()):
        raise ValueError("both partitions must lie in Gamma_beta")
    if pi.weight != sigma.weight:
        raise ValueError("weight mismatch")
    _, _, p_pi = kp_stats(pi)
    _, _, p_sigma = kp_stats(sigma)
    length = max(len(p_pi), len(p_sigma))
    return dominance_leq(tails(p_sigma, length), tails(p_pi, length))


def _lambda_dominates(pi: KostantPartition, sigma: KostantPartition) -> bool:
    return dominance_leq(kp_to_weight(pi), kp_to_weight(sigma))


def enumerate_module_types(b: DimVector, labels: Sequence[str] = ("z1", "z2")) -> list[KModuleType]:
    """Every module type of dimension ``b`` with regular summands at ``labels``."""
    # indecomposables: ("p", k), ("i", k), (z, k)
    pieces: list[tuple[str, int, DimVector]] = []
    for k in range(b.height + 1):
        if DimVector(k, k + 1).n <= b.n and k + 1 <= b.m:
            pieces.append(("p", k, DimVector(k, k + 1)))
        if k + 1 <= b.n and k <= b.m:
            pieces.append(("i", k, DimVector(k + 1, k)))
        if k + 1 <= min(b.n, b.m):
            for z in labels:
                pieces.append((z, k, DimVector(k + 1, k + 1)))
    out: list[KModuleType] = []

    def rec(idx: int, rest: DimVector, chosen: dict):
        if rest.n == 0 and rest.m == 0:
            p = [0] * (b.height + 1)
            i = [0] * (b.height + 1)
            reg = {z: [0] * (b.height + 1) for z in labels}
            for (fam, k), c in chosen.items():
                {"p": p, "i": i}.get(fam, reg.get(fam))[k] += c
            out.append(KModuleType(tuple(p), tuple(i), tuple((z, tuple(r)) for z, r in reg.items())))
            return
        if idx == len(pieces):
            return
        fam, k, d = pieces[idx]
        c = 0
        while d.n * c <= rest.n and d.m * c <= rest.m:
            if c:
                chosen[(fam, k)] = c
            rec(idx + 1, DimVector(rest.n - d.n * c, rest.m - d.m * c), chosen)
            c += 1
        chosen.pop((fam, k), None)

    rec(0, b, {})
    return out

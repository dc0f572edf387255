"""The affine root system of type A1^(1) seen through the Kronecker quiver.

A dimension vector ``n*alpha_1 + m*alpha_0`` is stored as ``DimVector(n, m)``.
Positive roots come in three families::

    gamma_k = alpha_1 + k*delta      (n, m) = (k+1, k)
    k*delta                          (n, m) = (k, k),  k >= 1
    beta_k  = alpha_0 + k*delta      (n, m) = (k, k+1)

and are ordered ``gamma_0 > gamma_1 > ... > (all k*delta) > ... > beta_1 > beta_0``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

__all__ = [
    "DimVector",
    "Root",
    "Ordering",
    "ALPHA0",
    "ALPHA1",
    "DELTA",
    "convex_compare",
    "height",
    "pairing",
    "root_from_dimvector",
    "parse_root",
    "positive_roots",
    "beta",
    "gamma",
    "delta",
]


@dataclass(frozen=True, order=True)
class DimVector:
    """``n`` copies of ``alpha_1`` plus ``m`` copies of ``alpha_0``."""

    n: int
    m: int

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.n + other.n, self.m + other.m)

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.n - other.n, self.m - other.m)

    def __mul__(self, k: int) -> "DimVector":
        return DimVector(k * self.n, k * self.m)

    __rmul__ = __mul__

    @property
    def rank(self) -> int:
        """``r = m - n`` in ``beta = r*alpha_0 + n*delta``."""
        return self.m - self.n

    @property
    def height(self) -> int:
        return self.n + self.m

    def is_nonnegative(self) -> bool:
        return self.n >= 0 and self.m >= 0

    def in_qpp(self) -> bool:
        """Membership in the cone spanned by the ``beta_k``."""
        return self.n >= 0 and self.m >= 0 and self.m >= self.n

    @classmethod
    def parse(cls, text: str) -> "DimVector":
        """Parse ``"n,m"``."""
        n, m = (int(x) for x in text.split(","))
        return cls(n, m)

    def __str__(self) -> str:
        return f"{self.n},{self.m}"


ALPHA0 = DimVector(0, 1)
ALPHA1 = DimVector(1, 0)
DELTA = DimVector(1, 1)


def height(beta: DimVector) -> int:
    return beta.n + beta.m


def pairing(a: DimVector, b: DimVector) -> int:
    """Symmetric form with ``(alpha_i, alpha_i) = 2`` and ``(alpha_0, alpha_1) = -2``."""
    return 2 * (a.m * b.m + a.n * b.n - a.n * b.m - a.m * b.n)


class Ordering(enum.Enum):
    GREATER = ">"
    LESS = "<"
    EQUIVALENT = "~"


_KIND_RANK = {"g": 2, "d": 1, "b": 0}


@dataclass(frozen=True)
class Root:
    """A positive root. ``kind`` is ``'g'`` (gamma), ``'d'`` (k*delta) or ``'b'`` (beta)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.index < (1 if self.kind == "d" else 0):
            raise ValueError(f"bad index {self.index} for kind {self.kind!r}")

    @property
    def dim(self) -> DimVector:
        k = self.index
        if self.kind == "g":
            return DimVector(k + 1, k)
        if self.kind == "d":
            return DimVector(k, k)
        return DimVector(k, k + 1)

    @property
    def is_real(self) -> bool:
        return self.kind != "d"

    def convex_key(self) -> tuple[int, int]:
        """Sort key whose order is the convex preorder (ties = equivalence)."""
        if self.kind == "g":
            return (2, -self.index)
        if self.kind == "d":
            return (1, 0)
        return (0, self.index)

    def sort_key(self) -> tuple[int, int, int]:
        """Convex key refined by the delta multiple, used only to normalize storage."""
        return self.convex_key() + ((self.index if self.kind == "d" else 0),)

    @property
    def token(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.token

    def __repr__(self) -> str:
        return f"Root({self.token})"


def beta(k: int) -> Root:
    return Root("b", k)


def gamma(k: int) -> Root:
    return Root("g", k)


def delta(k: int = 1) -> Root:
    return Root("d", k)


def convex_compare(a: Root, b: Root) -> Ordering:
    ka, kb = a.convex_key(), b.convex_key()
    if ka > kb:
        return Ordering.GREATER
    if ka < kb:
        return Ordering.LESS
    return Ordering.EQUIVALENT


def root_from_dimvector(v: DimVector) -> Root | None:
    """The positive root with dimension vector ``v``, or ``None``."""
    if v.n < 0 or v.m < 0:
        return None
    if v.n == v.m + 1:
        return Root("g", v.m)
    if v.m == v.n + 1:
        return Root("b", v.n)
    if v.n == v.m and v.n >= 1:
        return Root("d", v.n)
    return None


def positive_roots(max_height: int) -> list[Root]:
    """All positive roots of height at most ``max_height``."""
    out = []
    for h in range(1, max_height + 1):
        for n in range(h + 1):
            r = root_from_dimvector(DimVector(n, h - n))
            if r is not None:
                out.append(r)
    return out


_TOKEN = re.compile(r"^([gdb])(\d+)$")


def parse_root(token: str) -> Root:
    """Parse ``"g3"``, ``"b0"`` or ``"d2"``."""
    match = _TOKEN.match(token.strip())
    if not match:
        raise ValueError(f"bad root token {token!r}")
    return Root(match.group(1), int(match.group(2)))

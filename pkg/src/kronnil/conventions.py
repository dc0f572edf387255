"""Sign and normalization conventions shared by both sides of the comparison.

The literature disagrees on several normalizations that the comparison is
sensitive to. They are collected in one frozen record whose hash keys every
cache file and every report:

letter_order
    Order of the letters 0, 1 used for Lyndon words; ``(0, 1)`` means ``0 < 1``.
crossing
    The shuffle product weights an inverted pair of letters ``(a, b)`` by
    ``q^(-crossing * (alpha_a, alpha_b))``.
shift_sign
    The grading shift ``<1>`` acts on K-classes as ``q^shift_sign``.
twist
    The K-theoretic monoidal product of classes of ranks ``u`` and ``v`` is
    ``q^(twist*u*v)`` times the raw induction product.
units
    Extra ``q``-power per dual root vector ``E*(beta_n)``; index ``n``,
    missing entries are zero.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

__version__ = "0.1.0"

__all__ = ["Conventions", "DEFAULT", "ConventionUnfrozen", "load_conventions", "save_conventions"]

CONVENTIONS_FILE = "conventions.json"


class ConventionUnfrozen(RuntimeError):
    """Raised when a cross-side check runs before conventions were frozen."""


@dataclass(frozen=True)
class Conventions:
    letter_order: tuple[int, int] = (0, 1)
    crossing: int = 1
    shift_sign: int = -1
    twist: int = -1
    units: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if sorted(self.letter_order) != [0, 1]:
            raise ValueError("letter_order must be a permutation of (0, 1)")
        if self.crossing not in (1, -1) or self.shift_sign not in (1, -1):
            raise ValueError("crossing and shift_sign must be +1 or -1")
        object.__setattr__(self, "letter_order", tuple(self.letter_order))
        object.__setattr__(self, "units", tuple(self.units))

    def unit(self, n: int) -> int:
        return self.units[n] if n < len(self.units) else 0

    def to_json(self) -> dict:
        d = asdict(self)
        d["letter_order"] = list(self.letter_order)
        d["units"] = list(self.units)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "Conventions":
        return cls(
            letter_order=tuple(data["letter_order"]),
            crossing=int(data["crossing"]),
            shift_sign=int(data["shift_sign"]),
            twist=int(data["twist"]),
            units=tuple(data.get("units", ())),
        )

    @property
    def hash(self) -> str:
        """Short digest of the conventions together with the package version."""
        payload = json.dumps({"conventions": self.to_json(), "version": __version__}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]


DEFAULT = Conventions()


def save_conventions(conv: Conventions, cache_dir: str | Path) -> Path:
    path = Path(cache_dir) / CONVENTIONS_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    record = {"conventions": conv.to_json(), "hash": conv.hash, "version": __version__}
    path.write_text(json.dumps(record, sort_keys=True, indent=2) + "\n", encoding="utf-8")
    return path


def load_conventions(cache_dir: str | Path) -> Conventions:
    """Read frozen conventions; raise :class:`ConventionUnfrozen` if absent or stale."""
    path = Path(cache_dir) / CONVENTIONS_FILE
    if not path.exists():
        raise ConventionUnfrozen(f"no frozen conventions at {path}")
    record = json.loads(path.read_text(encoding="utf-8"))
    if record.get("version") != __version__:
        raise ConventionUnfrozen(f"{path} was frozen by version {record.get('version')}")
    conv = Conventions.from_json(record["conventions"])
    if conv.hash != record.get("hash"):
        raise ConventionUnfrozen(f"{path} hash does not match its contents")
    return conv

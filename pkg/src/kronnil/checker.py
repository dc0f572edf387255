"""Verification engine comparing the shuffle side with the K-theory side.

Each check returns a :class:`VerificationCase`. Failures are recorded with a
witness and never abort a run. Conventions are frozen once, from the single
structure-constant case ``(i, j) = (0, 1)``, and every other case is then an
independent test.
"""

from __future__ import annotations

import itertools
import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ._exact import NonLaurentCoefficient, NotInSpan
from .conventions import (
    Conventions,
    ConventionUnfrozen,
    load_conventions,
    save_conventions,
)
from .kostant import (
    KostantPartition,
    bilex_leq,
    dominance_leq,
    enumerate_gamma,
    enumerate_lambda,
    kp_stats,
    kp_to_weight,
)
from .kronecker import closure_leq_preprojective, degeneration_leq, preprojective_type
from .ktheory import (
    KClass,
    aj_class,
    delta_shift,
    delta_shift_bruteforce,
    expand_in_proper_standards,
    induction_product,
    monoidal_product,
    proper_standard_class,
)
from .qlaurent import LaurentQ
from .roots import DimVector
from .shuffle import ConventionError, ShuffleAlgebra

__all__ = [
    "CHECK_KINDS",
    "REPORT_NOTE",
    "Config",
    "ConfigError",
    "VerificationCase",
    "verify_orders",
    "verify_delta_formula",
    "verify_mon4",
    "verify_proper_standard_product",
    "structure_constants_match",
    "freeze_conventions",
    "load_or_freeze",
    "run_report",
    "report_to_json",
]

CHECK_KINDS = ("orders", "delta-formula", "mon4", "proper-standard-product", "structure-constants")

REPORT_NOTE = (
    "Only weak monoidality is a theorem: proper standard classes must correspond. "
    "Agreement of the remaining structure constants is conjectural, so a "
    "structure-constants failure would not contradict the proven results."
)


class ConfigError(ValueError):
    """Invalid configuration, detected before any computation."""


@dataclass
class VerificationCase:
    kind: str
    params: dict[str, Any]
    passed: bool
    lhs: dict[str, Any] = field(default_factory=dict)
    rhs: dict[str, Any] = field(default_factory=dict)
    witness: dict[str, Any] | None = None

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "params": self.params,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "VerificationCase":
        return cls(data["kind"], data["params"], data["pass"], data["lhs"], data["rhs"], data["witness"])


def _laurent_map(mapping: dict) -> dict[str, dict[str, str]]:
    out = {}
    for key, value in mapping.items():
        if isinstance(key, KostantPartition):
            key = key.token
        elif isinstance(key, tuple):
            key = ",".join(map(str, key))
        out[str(key)] = value.to_json()
    return dict(sorted(out.items()))


# -- orders ---------------------------------------------------------------------


def verify_orders(b: DimVector) -> VerificationCase:
    """Over ``Gamma_b x Gamma_b``: dominance <=> degeneration <=> closure, each => bilex."""
    gamma = enumerate_gamma(b)
    dominance = degeneration = bilex = 0
    witness = None
    for pi, sigma in itertools.product(gamma, repeat=2):
        dom = dominance_leq(kp_to_weight(pi), kp_to_weight(sigma))
        deg = degeneration_leq(preprojective_type(sigma), preprojective_type(pi))
        clo = closure_leq_preprojective(pi, sigma)
        bil = bilex_leq(pi, sigma)
        dominance += dom
        degeneration += deg
        bilex += bil
        if witness is None and (dom != deg or dom != clo or (dom and not bil)):
            witness = {"pi": pi.token, "sigma": sigma.token, "dominance": dom,
                       "degeneration": deg, "closure": clo, "bilex": bil}
    return VerificationCase(
        "orders",
        {"beta": [b.n, b.m], "size": len(gamma)},
        witness is None,
        {"dominance_pairs": dominance},
        {"degeneration_pairs": degeneration, "bilex_pairs": bilex},
        witness,
    )


# -- delta formula -----------------------------------------------------------------


def verify_delta_formula(r: int, n: int) -> VerificationCase:
    """Closed formula for ``delta_lambda`` against brute force over ``S_r``, ``lambda in Lambda_beta``."""
    b = DimVector(n, n + r)
    lhs, rhs, witness = {}, {}, None
    for lam in enumerate_lambda(b):
        key = ",".join(map(str, lam))
        lhs[key] = delta_shift(lam)
        rhs[key] = delta_shift_bruteforce(lam)
        if witness is None and lhs[key] != rhs[key]:
            witness = {"lambda": list(lam), "closed": lhs[key], "bruteforce": rhs[key]}
    return VerificationCase("delta-formula", {"r": r, "n": n}, witness is None, lhs, rhs, witness)


# -- convolution -------------------------------------------------------------------


def _dominant_weights(rank: int, max_entry: int) -> list[tuple[int, ...]]:
    return [lam for lam in itertools.product(range(max_entry, -1, -1), repeat=rank)
            if all(a >= b for a, b in zip(lam, lam[1:]))]


def verify_mon4(u: int, v: int, max_entry: int = 3) -> VerificationCase:
    """``A(mu) o A(nu) = A(mu, nu)`` for dominant ``mu``, ``nu`` of ranks ``u``, ``v``."""
    count, witness = 0, None
    for mu in _dominant_weights(u, max_entry):
        a_mu = aj_class(mu)
        for nu in _dominant_weights(v, max_entry):
            lhs = induction_product(a_mu, aj_class(nu))
            rhs = aj_class(mu + nu)
            count += 1
            if lhs != rhs and witness is None:
                witness = {"mu": list(mu), "nu": list(nu), "lhs": str(lhs), "rhs": str(rhs)}
    return VerificationCase("mon4", {"u": u, "v": v, "max_entry": max_entry}, witness is None,
                            {"identities_checked": count}, {"identities_failed": 0 if witness is None else 1},
                            witness)


def verify_associativity(weights: Sequence[int] = (0, 1, 2, 3)) -> VerificationCase:
    """``(a o b) o c = a o (b o c)`` on rank-1 classes."""
    witness = None
    count = 0
    for x, y, z in itertools.product(weights, repeat=3):
        a, b, c = aj_class((x,)), aj_class((y,)), aj_class((z,))
        count += 1
        if induction_product(induction_product(a, b), c) != induction_product(a, induction_product(b, c)):
            witness = {"weights": [x, y, z]}
            break
    return VerificationCase("mon4", {"associativity": list(weights)}, witness is None,
                            {"triples_checked": count}, {}, witness)


# -- cross-side checks ------------------------------------------------------------


def proper_standard_product(pi: KostantPartition, conventions: Conventions) -> KClass:
    """``q^(sum p_k(p_k-1)/2)`` times the product of rank-1 classes, ``beta_0`` factors first."""
    _, _, p = kp_stats(pi)
    out = KClass.unit()
    for part in reversed(pi.parts):
        out = monoidal_product(out, proper_standard_class((part.index,), conventions), conventions)
    return out.shift(sum(pk * (pk - 1) // 2 for pk in p))


def verify_proper_standard_product(pi: KostantPartition, conventions: Conventions) -> VerificationCase:
    lam = kp_to_weight(pi)
    lhs = proper_standard_product(pi, conventions)
    rhs = proper_standard_class(lam, conventions)
    ok = lhs == rhs
    witness = None if ok else {"pi": pi.token, "lambda": list(lam), "lhs": str(lhs), "rhs": str(rhs)}
    return VerificationCase(
        "proper-standard-product",
        {"pi": pi.token, "lambda": list(lam)},
        ok,
        _laurent_map(lhs.numerator),
        _laurent_map(rhs.numerator),
        witness,
    )


def shuffle_side(i: int, j: int, algebra: ShuffleAlgebra) -> dict[tuple[int, ...], LaurentQ]:
    x = algebra.product(algebra.dual_root_vector(i), algebra.dual_root_vector(j))
    return {kp_to_weight(pi): c for pi, c in algebra.expand_in_dual_pbw(x).items()}


def ktheory_side(i: int, j: int, conventions: Conventions) -> dict[tuple[int, ...], LaurentQ]:
    # opposite order: the class of beta_j acts first
    c = monoidal_product(proper_standard_class((j,), conventions),
                         proper_standard_class((i,), conventions), conventions)
    return expand_in_proper_standards(c, DimVector(i + j, i + j + 2), conventions)


def structure_constants_match(i: int, j: int, conventions: Conventions | None,
                              algebra: ShuffleAlgebra | None = None) -> VerificationCase:
    """Compare ``E*(beta_i) E*(beta_j)`` with ``Dbar(j) * Dbar(i)`` under ``pi -> lambda_pi``."""
    if conventions is None:
        raise ConventionUnfrozen("freeze conventions before comparing structure constants")
    algebra = algebra or ShuffleAlgebra(conventions)
    params = {"i": i, "j": j}
    try:
        lhs = shuffle_side(i, j, algebra)
        rhs = ktheory_side(i, j, conventions)
    except (NotInSpan, NonLaurentCoefficient, ConventionError) as exc:
        return VerificationCase("structure-constants", params, False, {}, {},
                                {"error": f"{type(exc).__name__}: {exc}"})
    witness = None
    for lam in sorted(set(lhs) | set(rhs), reverse=True):
        a, b = lhs.get(lam, LaurentQ()), rhs.get(lam, LaurentQ())
        if a != b:
            witness = {"lambda": list(lam), "shuffle": str(a), "ktheory": str(b)}
            break
    return VerificationCase("structure-constants", params, witness is None,
                            _laurent_map(lhs), _laurent_map(rhs), witness)


# -- convention freeze -------------------------------------------------------------


def convention_candidates() -> list[Conventions]:
    """Every combination of the open conventions, in tie-break priority order.

    Priority: shift sign -1 first (the grading shift ``<-1>`` is tensoring
    with the weight-one character), then crossing +1, letter order 0 < 1 and
    the smallest twist in absolute value.
    """
    out = []
    for s, crossing, order, twist in itertools.product((-1, 1), (1, -1), ((0, 1), (1, 0)), (0, -1, 1)):
        out.append(Conventions(letter_order=order, crossing=crossing, shift_sign=s, twist=twist))
    return out


def surviving_conventions() -> list[Conventions]:
    """Candidates with a nondegenerate ``E*(beta_1)`` that agree on the case ``(0, 1)``."""
    survivors = []
    for conv in convention_candidates():
        algebra = ShuffleAlgebra(conv)
        try:
            algebra.dual_root_vector(1)
        except (ConventionError, NonLaurentCoefficient):
            continue
        if structure_constants_match(0, 1, conv, algebra).passed:
            survivors.append(conv)
    return survivors


def freeze_conventions(cache_dir: str | Path | None = None) -> Conventions:
    survivors = surviving_conventions()
    if not survivors:
        raise ConventionError("no convention reproduces the (0, 1) case")
    conv = survivors[0]
    if cache_dir is not None:
        save_conventions(conv, cache_dir)
    return conv


def load_or_freeze(cache_dir: str | Path | None) -> Conventions:
    if cache_dir is None:
        return freeze_conventions(None)
    try:
        return load_conventions(cache_dir)
    except ConventionUnfrozen:
        return freeze_conventions(cache_dir)


# -- report ------------------------------------------------------------------------


@dataclass
class Config:
    max_height: int = 12
    max_rank: int = 4
    q_truncation: int = 10
    checks: list[str] = field(default_factory=lambda: list(CHECK_KINDS))
    cache_dir: str | None = None
    output: str | None = None

    def __post_init__(self):
        for name in ("max_height", "max_rank", "q_truncation"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        unknown = [c for c in self.checks if c not in CHECK_KINDS]
        if unknown:
            raise ConfigError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECK_KINDS)}")

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "Config":
        known = {"max_height", "max_rank", "q_truncation", "checks", "cache_dir", "output"}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config key(s): {', '.join(sorted(extra))}")
        return cls(**data)


def _cases(config: Config, conventions: Conventions) -> Iterable[VerificationCase]:
    checks = set(config.checks)
    if "orders" in checks:
        for h in range(1, config.max_height + 1):
            for n in range(h // 2 + 1):
                b = DimVector(n, h - n)
                if b.rank >= 1:
                    yield verify_orders(b)
    if "delta-formula" in checks:
        for r in range(1, min(4, config.max_rank) + 1):
            for n in range(5):
                yield verify_delta_formula(r, n)
    if "mon4" in checks:
        for total in range(2, min(4, config.max_rank) + 1):
            for u in range(1, total):
                yield verify_mon4(u, total - u)
        if config.max_rank >= 3:
            yield verify_associativity()
    if "proper-standard-product" in checks:
        for r in range(1, min(3, config.max_rank) + 1):
            for n in range(4):
                for pi in enumerate_gamma(DimVector(n, n + r)):
                    yield verify_proper_standard_product(pi, conventions)
    if "structure-constants" in checks and config.max_rank >= 2:
        algebra = ShuffleAlgebra(conventions, config.cache_dir)
        for total in range(5):
            for i in range(total + 1):
                yield structure_constants_match(i, total - i, conventions, algebra)


def run_report(config: Config) -> tuple[dict[str, Any], int]:
    """Run the configured suite; returns the report and the exit status."""
    conventions = load_or_freeze(config.cache_dir)
    cases = [c.to_json() for c in _cases(config, conventions)]
    failed = sum(not c["pass"] for c in cases)
    report = {
        "convention_hash": conventions.hash,
        "conventions": conventions.to_json(),
        "note": REPORT_NOTE,
        "summary": {"cases": len(cases), "failed": failed},
        "cases": cases,
    }
    if config.output:
        path = Path(config.output)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(report_to_json(report), encoding="utf-8")
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return report, (1 if failed else 0)


def report_to_json(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"

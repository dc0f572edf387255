"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .checker import CHECK_KINDS, Config, ConfigError, report_to_json, run_report
from .conventions import DEFAULT, ConventionUnfrozen, load_conventions
from .kostant import bilex_leq, dominance_leq, enumerate_gamma, kp_to_weight
from .kronecker import KModuleType, degeneration_leq, preprojective_type
from .ktheory import aj_class, delta_shift
from .roots import DimVector
from .shuffle import ShuffleAlgebra

__all__ = ["main", "build_parser"]


class UsageError(Exception):
    pass


def _beta(text: str) -> DimVector:
    try:
        return DimVector.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,m but got {text!r}")


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers but got {text!r}")


def _conventions(cache_dir):
    if cache_dir is None:
        return DEFAULT
    try:
        return load_conventions(cache_dir)
    except ConventionUnfrozen:
        return DEFAULT


def cmd_kp(args) -> int:
    if not args.beta.in_qpp():
        raise UsageError(f"{args.beta} is outside the beta cone (need 0 <= n <= m)")
    gamma = enumerate_gamma(args.beta)
    if args.action == "list":
        for pi in gamma:
            print(f"{pi}\tlambda={','.join(map(str, kp_to_weight(pi)))}")
    else:
        for pi in gamma:
            for sigma in gamma:
                if pi != sigma and bilex_leq(pi, sigma):
                    dom = dominance_leq(kp_to_weight(pi), kp_to_weight(sigma))
                    print(f"{pi} <= {sigma}\tdominance={'yes' if dom else 'no'}")
    return 0


def cmd_kronecker(args) -> int:
    if args.beta is not None:
        gamma = enumerate_gamma(args.beta)
        for pi in gamma:
            for sigma in gamma:
                if degeneration_leq(preprojective_type(sigma), preprojective_type(pi)):
                    print(f"Y{sigma} in closure of Y{pi}")
        return 0
    if args.N is None or args.M is None:
        raise UsageError("give --beta or both --N and --M")
    n_type, m_type = KModuleType.from_json(args.N), KModuleType.from_json(args.M)
    print("true" if degeneration_leq(n_type, m_type) else "false")
    return 0


def _parse_expr(text: str) -> list[int]:
    out = []
    for tok in text.replace(" ", "").split("*"):
        if not tok.startswith("E") or not tok[1:].isdigit():
            raise UsageError(f"bad factor {tok!r}; expected E<n>")
        out.append(int(tok[1:]))
    return out


def cmd_shuffle(args) -> int:
    conv = _conventions(args.cache_dir)
    algebra = ShuffleAlgebra(conv, args.cache_dir)
    if args.action == "rootvec":
        vec = algebra.dual_root_vector(args.n)
        print(json.dumps({"".join(map(str, w)): str(c) for w, c in sorted(vec.terms.items())}, indent=2))
        return 0
    factors = _parse_expr(args.expr)
    x = algebra.dual_root_vector(factors[0])
    for k in factors[1:]:
        x = algebra.product(x, algebra.dual_root_vector(k))
    for pi, c in sorted(algebra.expand_in_dual_pbw(x).items(), key=lambda kv: kv[0].token, reverse=True):
        print(f"{pi}\t{c}")
    return 0


def cmd_aj(args) -> int:
    lam = args.lam
    if len(lam) != args.r:
        raise UsageError(f"--lambda has {len(lam)} entries but --r is {args.r}")
    cls = aj_class(lam)
    if args.json:
        print(json.dumps(cls.to_json(), sort_keys=True, indent=2))
        return 0
    print(f"A({','.join(map(str, lam))}) = {cls}")
    series = cls.series(args.truncate)
    by_degree: dict[int, list[str]] = {}
    for (mono, e), k in sorted(series.items(), key=lambda kv: (kv[0][1], tuple(-m for m in kv[0][0]))):
        mono_s = "*".join(f"x{i + 1}^{m}" for i, m in enumerate(mono) if m) or "1"
        by_degree.setdefault(e, []).append(mono_s if k == 1 else f"{k}*{mono_s}")
    for e in sorted(by_degree):
        print(f"q^{e}: " + " + ".join(by_degree[e]))
    return 0


def cmd_delta(args) -> int:
    print(delta_shift(args.lam))
    return 0


def _load_config(args) -> Config:
    data: dict = {}
    if getattr(args, "config", None):
        try:
            data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    for name in ("max_height", "max_rank", "q_truncation", "cache_dir", "output"):
        value = getattr(args, name, None)
        if value is not None:
            data[name] = value
    suite = getattr(args, "suite", None)
    if suite is not None and suite != "all":
        data["checks"] = [suite]
    return Config.from_mapping(data)


def cmd_verify(args) -> int:
    config = _load_config(args)
    report, status = run_report(config)
    if not config.output:
        sys.stdout.write(report_to_json(report))
    else:
        s = report["summary"]
        print(f"{s['cases']} cases, {s['failed']} failed; report written to {config.output}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kronnil", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"kronnil {__version__} (conventions {DEFAULT.hash})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kp", help="Kostant partitions in Gamma_beta")
    p.add_argument("action", choices=["list", "poset"])
    p.add_argument("--beta", type=_beta, required=True, help="n,m for n*alpha_1 + m*alpha_0")
    p.set_defaults(func=cmd_kp)

    p = sub.add_parser("kronecker", help="degeneration order of Kronecker module types")
    p.add_argument("action", choices=["degen"])
    p.add_argument("--beta", type=_beta)
    p.add_argument("--N", help="JSON module type")
    p.add_argument("--M", help="JSON module type")
    p.set_defaults(func=cmd_kronecker)

    p = sub.add_parser("shuffle", help="dual root vectors and dual PBW expansions")
    p.add_argument("action", choices=["expand", "rootvec"])
    p.add_argument("--expr", default="E1*E0", help='product such as "E0*E1"')
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--cache-dir", dest="cache_dir")
    p.set_defaults(func=cmd_shuffle)

    p = sub.add_parser("aj", help="Andersen-Jantzen class")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.add_argument("--truncate", type=int, default=10)
    p.add_argument("--json", action="store_true", help="print the class as JSON instead of a series")
    p.set_defaults(func=cmd_aj)

    p = sub.add_parser("delta", help="the shift delta_lambda")
    p.add_argument("--lambda", dest="lam", type=_weight, required=True)
    p.set_defaults(func=cmd_delta)

    for name, helptext in (("verify", "run a verification suite"), ("report", "run the configured suite")):
        p = sub.add_parser(name, help=helptext)
        if name == "verify":
            p.add_argument("suite", help="all or one of: " + ", ".join(CHECK_KINDS))
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--max-height", dest="max_height", type=int)
        p.add_argument("--max-rank", dest="max_rank", type=int)
        p.add_argument("--q-truncation", dest="q_truncation", type=int)
        p.add_argument("--cache-dir", dest="cache_dir")
        p.add_argument("--output")
        p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ConfigError, ValueError) as exc:
        print(f"kronnil: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

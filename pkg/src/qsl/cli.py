"""Command line front end.

    qsl imm --m 1 --n 1 --lambda 2,1 --rows 1,1,2
    qsl schur --m 1 --n 1 --lambda 2,1
    qsl series --kind alpha --k 2 --m 1 --n 1
    qsl verify macmahon --m 1 --n 1 --order 4 --format json

Exit codes: 0 when every check passes, 1 when a check fails (the report
carries the first failing witness), 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import combinat as cb
from . import gtmodule as gt
from . import identities as ids
from .aqmat import NCPoly, algebra, confluence_fuzz, verify_rtt
from .hecke import verify_idempotents
from .immanant import immanant, verify_paths, verify_vanishing
from .qscalar import QScalar
from .report import Report
from .superlinear import verify_hecke_quotient, verify_ybe
from .symfun import SPoly, super_schur

__all__ = ["CliConfig", "SUITES", "EXTRA_SUITES", "build_parser", "run_suite", "main"]

FORMATS = ("text", "json", "latex")


class UsageError(ValueError):
    pass


@dataclass
class CliConfig:
    m: int | None = None
    n: int | None = None
    la: tuple[int, ...] | None = None
    r: int | None = None
    suite: str | None = None
    fmt: str = "text"
    q: Fraction | None = None
    seed: int = 0
    order: int | None = None
    experimental: bool = False

    def validate(self) -> None:
        if self.m is not None or self.n is not None:
            if self.m is None or self.n is None:
                raise UsageError("--m and --n go together")
            if self.m < 0 or self.n < 0 or self.m + self.n < 1:
                raise UsageError("need m, n >= 0 and m + n >= 1")
        if self.la is not None and self.r is not None and sum(self.la) != self.r:
            raise UsageError(f"--lambda has size {sum(self.la)}, not r={self.r}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.replace(" ", "").split(",") if v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _kmax(order: int) -> int:
    cap = os.environ.get("QSL_KMAX")
    if cap:
        try:
            return min(order, int(cap))
        except ValueError:
            raise UsageError("QSL_KMAX must be an integer")
    return order


# ----------------------------------------------------------------------
# suites: each yields Reports in a fixed order


def _grid(cfg: CliConfig, default: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    return [(cfg.m, cfg.n)] if cfg.m is not None else list(default)


def _rmax(cfg: CliConfig, default: int) -> int:
    return cfg.r if cfg.r is not None else default


def _shapes(cfg: CliConfig, rmax: int) -> list[tuple[int, ...]]:
    if cfg.la is not None:
        return [cb.as_partition(cfg.la)]
    return [la for r in range(1, rmax + 1) for la in cb.partitions(r)]


def _ybe(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1), (1, 2), (2, 2)]):
        yield verify_ybe(algebra(m, n).cfg)


def _hecke(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1), (1, 2), (2, 2)]):
        yield verify_hecke_quotient(algebra(m, n).cfg)
    for r in range(1, _rmax(cfg, 3) + 1):
        yield verify_idempotents(r)


def _rtt(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1), (1, 2)]):
        yield verify_rtt(algebra(m, n))


def _confluence(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        yield confluence_fuzz(algebra(m, n), count=200, seed=cfg.seed)


def _immanant(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        alg = algebra(m, n)
        for r in range(1, _rmax(cfg, 3) + 1):
            yield verify_paths(alg, r)
        yield verify_vanishing(alg, 4)


def _macmahon(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        yield ids.verify_macmahon(algebra(m, n), _kmax(cfg.order or 4))


def _newton(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        yield ids.verify_newton(algebra(m, n), _kmax(cfg.order or 3))


def _gj(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        alg = algebra(m, n)
        for la in _shapes(cfg, _rmax(cfg, 4 if (m, n) == (1, 1) else 3)):
            yield ids.goulden_jackson(la, alg)


def _littlewood(distinct: bool) -> Callable[[CliConfig], Iterator[Report]]:
    def run(cfg: CliConfig) -> Iterator[Report]:
        for m, n in _grid(cfg, [(1, 1)]):
            alg = algebra(m, n)
            for total in range(2, _rmax(cfg, 4) + 1):
                for a in range(1, total):
                    for mu in cb.partitions(a):
                        for nu in cb.partitions(total - a):
                            for I in cb.multisets(alg.N, total):
                                if (len(set(I)) == total) == distinct:
                                    yield ids.verify_littlewood_product(mu, nu, I, alg)
    return run


def _lmw(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        alg = algebra(m, n)
        for la in _shapes(cfg, _rmax(cfg, 3)):
            for I in cb.multisets(alg.N, sum(la)):
                yield ids.verify_lmw(la, I, alg)


def _littlewood3(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        alg = algebra(m, n)
        roots = ids.berezinian_roots(alg)
        yield roots.report
        for la in _shapes(cfg, _rmax(cfg, 4)):
            yield ids.verify_littlewood_three(la, alg, roots)


def _hessenberg(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1)]):
        alg = algebra(m, n)
        for la in _shapes(cfg, _rmax(cfg, 4)):
            yield ids.hessenberg_check(la, alg)


def _ch11(cfg: CliConfig) -> Iterator[Report]:
    yield ids.verify_cayley_hamilton_11()


def _kostant(cfg: CliConfig) -> Iterator[Report]:
    grid = _grid(cfg, [(1, 1), (2, 1)])
    for m, n in grid:
        alg = algebra(m, n)
        full = (m, n) == (1, 1) or cfg.m is not None
        for r in range(1, _rmax(cfg, 3) + 1):
            if not full and r != 3:
                continue
            for la in cb.hook_partitions(r, m, n):
                if cfg.la is not None and la != cb.as_partition(cfg.la):
                    continue
                for mu in cb.weak_compositions(alg.N, r):
                    yield gt.kostant_supertrace_check(la, mu, alg)
                if not full:
                    break


def _gt(cfg: CliConfig) -> Iterator[Report]:
    for m, n in _grid(cfg, [(1, 1), (2, 1), (1, 2), (2, 2)]):
        if m < 1:
            continue
        rmax = _rmax(cfg, 3)
        for r in range(1, rmax + 1):
            for la in cb.hook_partitions(r, m, n):
                yield gt.verify_patterns(la, m, n)
        yield gt.adjudicate_convention(m, n, rmax)


SUITES: dict[str, Callable[[CliConfig], Iterator[Report]]] = {
    "ybe": _ybe,
    "hecke": _hecke,
    "rtt": _rtt,
    "macmahon": _macmahon,
    "newton": _newton,
    "gj": _gj,
    "littlewood1": _littlewood(True),
    "littlewood2": _littlewood(False),
    "littlewood3": _littlewood3,
    "lmw": _lmw,
    "hessenberg": _hessenberg,
    "ch11": _ch11,
    "kostant": _kostant,
    "gt": _gt,
}
EXTRA_SUITES: dict[str, Callable[[CliConfig], Iterator[Report]]] = {
    "confluence": _confluence,
    "immanant": _immanant,
}


def run_suite(name: str, cfg: CliConfig) -> list[Report]:
    if name == "all":
        names = list(SUITES) + list(EXTRA_SUITES)
    elif name in SUITES or name in EXTRA_SUITES:
        names = [name]
    else:
        raise UsageError(f"unknown suite {name!r}")
    out: list[Report] = []
    for s in names:
        out.extend((SUITES.get(s) or EXTRA_SUITES[s])(cfg))
    if cfg.experimental:
        out.append(ids.cayley_hamilton_residual_21())
    return out


# ----------------------------------------------------------------------
# output


def _specialize_ncpoly(p: NCPoly, q: Fraction) -> NCPoly:
    def f(c: QScalar) -> QScalar:
        v = c.subs(q)
        return QScalar(v.numerator, v.denominator)
    return p.map_coeffs(f)


def _format_ncpoly(p: NCPoly, cfg: CliConfig) -> str:
    if cfg.q is not None:
        p = _specialize_ncpoly(p, cfg.q)
    if cfg.fmt == "json":
        return p.to_json()
    return p.latex()


def _format_spoly(p: SPoly, cfg: CliConfig) -> str:
    if cfg.q is not None:
        def f(c: QScalar) -> QScalar:
            v = c.subs(cfg.q)
            return QScalar(v.numerator, v.denominator)
        p = p.map_coeffs(f)
    if cfg.fmt == "json":
        return p.to_json()
    return str(p)


def _check_json(rep: Report) -> dict:
    out = {"name": rep.identity, "params": rep.params, "status": rep.status}
    if rep.witness is not None:
        out["witness"] = rep.witness
    if rep.details:
        out["details"] = rep.details
    return out


def _format_reports(suite: str, reps: list[Report], cfg: CliConfig) -> str:
    if cfg.fmt == "json":
        return json.dumps({"suite": suite, "checks": [_check_json(r) for r in reps]},
                          sort_keys=True, default=str)
    lines = []
    for rep in reps:
        params = " ".join(f"{k}={json.dumps(v, default=str)}" for k, v in rep.params.items())
        tag = rep.status.upper()
        if cfg.fmt == "latex":
            lines.append(f"\\texttt{{{rep.identity}}} & {params} & {tag} \\\\")
        else:
            lines.append(f"{tag:<8} {rep.identity} {params}".rstrip())
        if rep.witness is not None:
            lines.append(f"    witness: {json.dumps(rep.witness, default=str)}")
    failed = sum(r.status == "fail" for r in reps)
    summary = f"{suite}: {len(reps) - failed}/{len(reps)} checks without failure"
    lines.append(f"% {summary}" if cfg.fmt == "latex" else summary)
    return "\n".join(lines)


# ----------------------------------------------------------------------
# commands


def _need_mn(cfg: CliConfig) -> None:
    if cfg.m is None:
        raise UsageError("--m and --n are required")


def cmd_imm(args, cfg: CliConfig) -> int:
    _need_mn(cfg)
    rows = args.rows
    cols = args.cols if args.cols is not None else rows
    if len(rows) != sum(cfg.la) or len(cols) != len(rows):
        raise UsageError("--rows/--cols must have |lambda| entries")
    N = cfg.m + cfg.n
    if any(not 1 <= v <= N for v in rows + cols):
        raise UsageError(f"indices must lie in 1..{N}")
    p = immanant(cb.as_partition(cfg.la), rows, cols, alg=algebra(cfg.m, cfg.n))
    print(_format_ncpoly(p, cfg))
    return 0


def cmd_schur(args, cfg: CliConfig) -> int:
    _need_mn(cfg)
    print(_format_spoly(super_schur(cb.as_partition(cfg.la), cfg.m, cfg.n), cfg))
    return 0


def cmd_series(args, cfg: CliConfig) -> int:
    _need_mn(cfg)
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    k = _kmax(args.k) if os.environ.get("QSL_KMAX") else args.k
    if k != args.k:
        raise UsageError(f"k={args.k} exceeds QSL_KMAX")
    fn = {"alpha": ids.alpha, "beta": ids.beta, "gamma": ids.gamma}[args.kind]
    print(_format_ncpoly(fn(algebra(cfg.m, cfg.n), k), cfg))
    return 0


def cmd_verify(args, cfg: CliConfig) -> int:
    if cfg.la is not None:
        cfg.la = cb.as_partition(cfg.la)
    reps = run_suite(args.suite, cfg)
    print(_format_reports(args.suite, reps, cfg))
    return 1 if any(r.status == "fail" for r in reps) else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--q", type=_fraction, help="specialise q to a rational number")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="qsl", description="Quantum super immanants in A_q(Mat_{m|n}).")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("imm", parents=[common], help="compute one immanant")
    s.add_argument("--lambda", dest="la", type=_ints, required=True)
    s.add_argument("--rows", type=_ints, required=True)
    s.add_argument("--cols", type=_ints)
    s.set_defaults(func=cmd_imm)

    s = sub.add_parser("schur", parents=[common], help="supersymmetric Schur polynomial")
    s.add_argument("--lambda", dest="la", type=_ints, required=True)
    s.set_defaults(func=cmd_schur)

    s = sub.add_parser("series", parents=[common], help="coefficient of a generating series")
    s.add_argument("--kind", choices=("alpha", "beta", "gamma"), required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=list(SUITES) + list(EXTRA_SUITES) + ["all"])
    s.add_argument("--order", type=int)
    s.add_argument("--r", type=int, help="largest degree to check")
    s.add_argument("--lambda", dest="la", type=_ints)
    s.add_argument("--experimental", action="store_true",
                   help="also report the (2|1) Cayley-Hamilton residual")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(m=args.m, n=args.n, la=getattr(args, "la", None), r=getattr(args, "r", None),
                    suite=getattr(args, "suite", None), fmt=args.fmt, q=args.q, seed=args.seed,
                    order=getattr(args, "order", None),
                    experimental=getattr(args, "experimental", False))
    try:
        cfg.validate()
        if cfg.order is not None and cfg.order < 1:
            raise UsageError("--order must be positive")
        if cfg.la is not None and list(cfg.la) != sorted(cfg.la, reverse=True) or \
                (cfg.la is not None and min(cfg.la) < 1):
            raise UsageError("--lambda must be a partition")
        return args.func(args, cfg)
    except UsageError as exc:
        parser.error(str(exc))
    except ZeroDivisionError as exc:
        print(f"qsl: q-specialisation hits a pole: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

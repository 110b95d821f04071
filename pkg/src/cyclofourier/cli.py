"""Command-line interface: sweeps, tables, and decision procedures.

Exit codes: 0 when the run succeeded and all checks passed (or a decision
was rendered), 1 when checks failed, 2 on usage errors, 3 when a
brute-force budget was exceeded.  All randomness flows from one seed, so
identical configurations give byte-identical reports.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass

from .chargauss import check_gauss_identities, enumerate_characters, gauss_sum, standard_ring
from .diagonalize import decide_diag_cyclic, decide_diag_group, vandermonde_iso
from .exactring import cyclotomic_polynomial, is_unit
from .groupalgebra import fourier_inversion_report
from .isoverify import (CircleFunction, criterion_vs_determinant, natural_iso_sweep,
                        naturality_sweep)
from .report import BudgetExceeded, VerifyReport

DEFAULT_SEED = 1729
DEFAULT_BUDGET = 10 ** 7

_DEFAULT_MAX_ORDER = {2: 32, 3: 27}
_DEFAULT_NATURAL_ORDER = {2: 16, 3: 27}


@dataclass(slots=True)
class RunConfig:
    command: str
    p: int = 2
    max_order: int | None = None
    max_r: int = 3
    r: int = 2
    level: int = 3
    samples: int = 100
    seed: int = DEFAULT_SEED
    fmt: str = "json"
    output: str | None = None
    jobs: int = 1
    budget: int = DEFAULT_BUDGET
    alpha: str = "tpzc"
    dump_matrix: bool = False
    extra_groups: int = 2


def _budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("CYCLO_BUDGET")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_report(report: VerifyReport, fmt: str, output: str | None) -> int:
    _emit(report.to_json() if fmt == "json" else report.to_text(), output)
    return 0 if report.failed == 0 else 1


def _alpha_from_name(name: str, p: int) -> CircleFunction:
    if name in ("tpzc", "spike"):
        return CircleFunction.spike(p)
    raise ValueError(f"unknown alpha function {name!r}")


def cmd_phi(args) -> int:
    poly = cyclotomic_polynomial(args.n)
    if args.format == "json":
        _emit(json.dumps([str(c) for c in poly.coeffs]), args.output)
    else:
        _emit(poly.pretty(), args.output)
    return 0


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(command=f"verify-{args.what}", p=args.p, max_r=args.max_r,
                    r=args.r, samples=args.samples, seed=args.seed,
                    fmt=args.format, output=args.output, jobs=args.jobs,
                    budget=_budget_from_env(DEFAULT_BUDGET), alpha=args.alpha,
                    dump_matrix=args.dump_matrix, extra_groups=args.extra_groups)
    cfg.max_order = args.max_order or _DEFAULT_MAX_ORDER.get(args.p, args.p ** 3)
    return cfg


def cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    p = cfg.p
    if args.what == "fourier":
        report = fourier_inversion_report(p, cfg.max_order)
    elif args.what == "gauss":
        report = VerifyReport("verify-gauss", {"p": p, "max_r": cfg.max_r})
        for r in range(1, cfg.max_r + 1):
            report.extend(check_gauss_identities(p, r).checks)
    elif args.what == "iso":
        fn = _alpha_from_name(cfg.alpha, p)
        natural = args.natural_max_order
        if natural is None:
            natural = min(cfg.max_order, _DEFAULT_NATURAL_ORDER.get(p, 1))
        report = natural_iso_sweep(p, cfg.max_order, hom_order_bound=natural, fn=fn,
                                   dump_matrix=cfg.dump_matrix, jobs=cfg.jobs)
    elif args.what == "criterion-oracle":
        report = criterion_vs_determinant(p, cfg.r, cfg.samples, cfg.seed,
                                          extra_groups=cfg.extra_groups)
    elif args.what == "naturality":
        bound = args.max_order or min(_DEFAULT_NATURAL_ORDER.get(p, 1), 16)
        fn = _alpha_from_name(cfg.alpha, p)
        report = naturality_sweep(p, bound, fn, jobs=cfg.jobs)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.what)
    return _emit_report(report, cfg.fmt, cfg.output)


def cmd_diag(args) -> int:
    budget = _budget_from_env(args.budget)
    if args.group:
        orders = [int(tok) for tok in args.group.split(",") if tok]
        verdict = decide_diag_group(orders, args.modulus, budget=budget)
        n = math.lcm(*orders) if orders else 1
    else:
        n = args.n
        verdict = decide_diag_cyclic(n, args.modulus, budget=budget)
    payload = verdict.to_json()
    if args.emit_iso and verdict.decision:
        split = vandermonde_iso(n, args.modulus, verdict.witness)
        payload["points"] = list(split.points)
        payload["matrix"] = split.matrix.to_json()
    _emit(json.dumps(payload), args.output)
    return 0


def cmd_gauss_table(args) -> int:
    rows = []
    for r in range(1, args.max_r + 1):
        N = args.p ** r
        ring = standard_ring(args.p, r)
        for chi in enumerate_characters(args.p, r, ring):
            for u in range(N):
                value = gauss_sum(chi, u=u)
                rows.append({
                    "N": N,
                    "chi_exponents": ";".join(map(str, chi.exponents)),
                    "u": u,
                    "sum_coeffs": ";".join(value.coeff_strings()),
                    "is_unit": is_unit(value),
                })
    if args.format == "json":
        _emit(json.dumps(rows, indent=2), args.output)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["N", "chi_exponents", "u",
                                                 "sum_coeffs", "is_unit"])
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue().rstrip("\n"), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclofourier",
        description="Exact verification of Fourier inversion, Gauss-sum identities, "
                    "and group-algebra diagonalizability.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_phi = sub.add_parser("phi", help="print a cyclotomic polynomial")
    p_phi.add_argument("--n", type=int, required=True)
    p_phi.add_argument("--format", choices=["text", "json"], default="text")
    p_phi.add_argument("--output")
    p_phi.set_defaults(func=cmd_phi)

    p_verify = sub.add_parser("verify", help="run a verification sweep")
    p_verify.add_argument("what", choices=["fourier", "gauss", "iso",
                                           "criterion-oracle", "naturality"])
    p_verify.add_argument("--p", type=int, default=2)
    p_verify.add_argument("--max-order", type=int, default=None)
    p_verify.add_argument("--max-r", type=int, default=3)
    p_verify.add_argument("--r", type=int, default=2)
    p_verify.add_argument("--samples", type=int, default=100)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--extra-groups", type=int, default=2)
    p_verify.add_argument("--alpha", default="tpzc",
                          help="tpzc (alias spike): 2 at the points 1/p^s, 1 elsewhere")
    p_verify.add_argument("--natural-max-order", type=int, default=None)
    p_verify.add_argument("--dump-matrix", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--format", choices=["text", "json"], default="json")
    p_verify.add_argument("--output")
    p_verify.set_defaults(func=cmd_verify)

    p_diag = sub.add_parser("diag", help="diagonalizability of a group algebra over Z/m")
    p_diag.add_argument("--modulus", type=int, required=True)
    group = p_diag.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int)
    group.add_argument("--group", help="comma-separated cyclic orders, e.g. 2,2")
    p_diag.add_argument("--emit-iso", action="store_true")
    p_diag.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_diag.add_argument("--output")
    p_diag.set_defaults(func=cmd_diag)

    p_table = sub.add_parser("gauss-table", help="tabulate Gauss sums")
    p_table.add_argument("--p", type=int, default=2)
    p_table.add_argument("--max-r", type=int, default=3)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")
    p_table.add_argument("--output")
    p_table.set_defaults(func=cmd_gauss_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())

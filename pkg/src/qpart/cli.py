"""Command-line front end.

    qpart count --family R --n-max 6
    qpart verify --identity thm13 --order 100 --format json
    qpart bijection --n 6 --ascii

Exit codes: 0 success / verification passed, 1 verification failed,
2 usage error.  Results go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Optional

from qpart import identities as I
from qpart import partitions as P
from qpart.bijection import colored_to_over

DEFAULT_MAX_ORDER = 1000
ENUMERATION_CAP = 30
FAMILIES = ("R", "R2", "R3", "D", "C")
IDENTITIES = ("thm13", "thm32", "funceq", "jtp", "cd-equal", "sumsides")


@dataclass
class RunConfig:
    subcommand: str
    family: Optional[str] = None
    n_max: Optional[int] = None
    order: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    a: Optional[int] = None
    i: Optional[int] = None
    identity: Optional[str] = None
    n: Optional[int] = None
    sign: Optional[int] = None
    shift: Optional[int] = None
    base: int = 2
    format: str = "text"
    ascii: bool = False
    max_order: int = DEFAULT_MAX_ORDER


class UsageError(Exception):
    pass


def _max_order() -> int:
    raw = os.environ.get("QPART_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QPART_MAX_ORDER must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpart",
        description="2-colored Rogers-Ramanujan partitions and q-series identity checks",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "text"), default="text")
    fmt.add_argument("--ascii", action="store_true",
                     help="render overlines as a trailing '~'")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    count = sub.add_parser("count", parents=[fmt], help="tabulate a counting function")
    count.add_argument("--family", required=True, choices=FAMILIES)
    count.add_argument("--n-max", type=int, required=True)
    count.add_argument("--k", type=int)
    count.add_argument("--a", type=int)
    count.add_argument("--i", type=int)

    verify = sub.add_parser("verify", parents=[fmt], help="check an identity")
    verify.add_argument("--identity", required=True, choices=IDENTITIES)
    verify.add_argument("--order", type=int)
    verify.add_argument("--m", type=int, default=8)
    verify.add_argument("--k", type=int, default=2)
    verify.add_argument("--i", type=int, default=2)
    verify.add_argument("--sign", type=int, choices=(1, -1))
    verify.add_argument("--shift", type=int, choices=(0, 1))
    verify.add_argument("--base", type=int, default=2)

    bij = sub.add_parser("bijection", parents=[fmt],
                         help="list colored partitions with their overpartition images")
    bij.add_argument("--n", type=int, required=True)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand, format=args.format, ascii=args.ascii,
                    max_order=_max_order())
    for name in ("family", "n_max", "order", "m", "k", "a", "i", "identity", "n",
                 "sign", "shift", "base"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    return cfg


# -- count -------------------------------------------------------------------


def _count_rows(cfg: RunConfig) -> list[int]:
    n_max = cfg.n_max
    if n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if n_max > cfg.max_order:
        raise UsageError(f"--n-max {n_max} exceeds the order cap {cfg.max_order}")
    family = cfg.family
    if family == "R":
        return P.count_2crr_table(n_max, 1)
    if family == "R2":
        return P.count_2crr_table(n_max, 2)
    if family == "R3":
        return P.count_2crr_no_red1_table(n_max)
    if family == "D":
        if cfg.k is None or cfg.a is None:
            raise UsageError("family D needs --k and --a")
        if not cfg.k >= cfg.a >= 1:
            raise UsageError("family D needs k >= a >= 1")
        if n_max > ENUMERATION_CAP:
            raise UsageError(f"family D is enumerated; --n-max must be <= {ENUMERATION_CAP}")
        return [P.count_D(cfg.k, cfg.a, n) for n in range(n_max + 1)]
    if cfg.k is None or cfg.i is None:
        raise UsageError("family C needs --k and --i")
    if not cfg.k >= cfg.i >= 1:
        raise UsageError("family C needs k >= i >= 1")
    return P.count_C_table(cfg.k, cfg.i, n_max)


def cmd_count(cfg: RunConfig, out) -> int:
    counts = _count_rows(cfg)
    if cfg.format == "json":
        json.dump({"family": cfg.family,
                   "rows": [{"n": n, "count": c} for n, c in enumerate(counts)]}, out)
        out.write("\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "count"])
        writer.writerows(enumerate(counts))
    else:
        for n, c in enumerate(counts):
            out.write(f"{n}\t{c}\n")
    return 0


# -- verify ------------------------------------------------------------------


def _run_verifications(cfg: RunConfig) -> list[I.VerificationReport]:
    tag = cfg.identity
    defaults = {"thm13": 100, "thm32": 100, "funceq": 30, "jtp": 200,
                "cd-equal": 18, "sumsides": 100}
    order = defaults[tag] if cfg.order is None else cfg.order
    if order < 0:
        raise UsageError("--order must be >= 0")
    if order > cfg.max_order:
        raise UsageError(f"--order {order} exceeds the order cap {cfg.max_order}")
    if tag == "thm13":
        return [I.verify_thm13(order)]
    if tag == "thm32":
        return [I.verify_thm32(order)]
    if tag == "sumsides":
        return [I.verify_sum_sides(order)]
    if tag == "funceq":
        if cfg.m < 1 or order < cfg.m:
            raise UsageError("funceq needs 1 <= --m <= --order")
        if order > ENUMERATION_CAP:
            raise UsageError(f"funceq tables are enumerated; --order must be <= {ENUMERATION_CAP}")
        return [I.verify_functional_equations(cfg.m, order)]
    if tag == "jtp":
        signs = (1, -1) if cfg.sign is None else (cfg.sign,)
        shifts = (0, 1) if cfg.shift is None else (cfg.shift,)
        try:
            return [I.verify_jtp(s, k, order, cfg.base) for s in signs for k in shifts]
        except I.UnsupportedSpecializationError as exc:
            raise UsageError(str(exc))
    if not cfg.k >= cfg.i >= 1:
        raise UsageError("cd-equal needs k >= i >= 1")
    if order > ENUMERATION_CAP:
        raise UsageError(f"cd-equal enumerates D; --order must be <= {ENUMERATION_CAP}")
    return [I.verify_CD_equality(cfg.k, cfg.i, order)]


def _mismatch_fields(report: I.VerificationReport) -> list:
    mm = report.first_mismatch
    if mm is None:
        return ["", "", ""]
    index = ":".join(map(str, mm.index)) if isinstance(mm.index, tuple) else mm.index
    return [index, mm.lhs, mm.rhs]


def cmd_verify(cfg: RunConfig, out, err) -> int:
    reports = _run_verifications(cfg)
    for r in reports:
        if r.passed and not r.nontrivial:
            err.write(f"warning: {r.identity} at order {r.order}: vacuous window, "
                      "only q^0 compared\n")
        for note in r.notes:
            if not note.startswith("vacuous"):
                err.write(f"note: {r.identity}: {note}\n")
    if cfg.format == "json":
        for r in reports:
            out.write(r.to_json() + "\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["identity", "order", "status", "mismatch_index", "lhs", "rhs"])
        for r in reports:
            writer.writerow([r.identity, r.order, r.status, *_mismatch_fields(r)])
    else:
        for r in reports:
            line = f"{r.identity}\torder={r.order}\t{r.status}"
            if r.comparison:
                line += f"\t{r.comparison}"
            if r.first_mismatch is not None:
                idx, lhs, rhs = _mismatch_fields(r)
                line += f"\tfirst mismatch at {idx}: {lhs} != {rhs}"
            out.write(line + "\n")
    return 0 if all(r.passed for r in reports) else 1


# -- bijection ---------------------------------------------------------------


def cmd_bijection(cfg: RunConfig, out) -> int:
    n = cfg.n
    if n < 0:
        raise UsageError("--n must be >= 0")
    if n > ENUMERATION_CAP:
        raise UsageError(f"--n {n} exceeds the enumeration cap {ENUMERATION_CAP}")
    pairs = [(str(p), colored_to_over(p).format(ascii=cfg.ascii))
             for p in P.enumerate_2crr(n, 1)]
    if cfg.format == "json":
        json.dump({"n": n, "pairs": [{"colored": c, "overpartition": o}
                                     for c, o in pairs]}, out, ensure_ascii=False)
        out.write("\n")
    elif cfg.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["colored", "overpartition"])
        writer.writerows(pairs)
    else:
        for c, o in pairs:
            out.write(f"{c}\t{o}\n")
    return 0


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    buffer = io.StringIO()
    try:
        cfg = config_from_args(args)
        if cfg.subcommand == "count":
            code = cmd_count(cfg, buffer)
        elif cfg.subcommand == "verify":
            code = cmd_verify(cfg, buffer, err)
        else:
            code = cmd_bijection(cfg, buffer)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"qpart: error: {exc}\n")
        return 2
    out.write(buffer.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())

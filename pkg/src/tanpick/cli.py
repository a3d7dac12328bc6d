"""Command-line front end: ``tanpick verify|sample|pmf|table``."""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from ._accel import backend_name
from .errors import TanpickError
from .report import DEFAULTS, DEFAULTS_VERSION, DEFAULT_SEED, IDENTITIES, run_verify
from .sampling import (
    DEFAULT_X_TERMS,
    RandomSource,
    sample_skellam_direct,
    sample_X,
    sample_Y,
    skellam_pmf_table,
)
from .series import TruncationSpec
from .tables import HEADERS, fmt, run_table


def to_json(obj):
    """JSON text with every float written to 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    if obj is None:
        return "null"
    return json.dumps(str(obj))


def _emit(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _format_reports(reports):
    rows = [
        (
            r.identity_id,
            "PASS" if r.passed else "FAIL",
            fmt(r.abs_err),
            fmt(r.tolerance),
            " ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in r.inputs.items()),
        )
        for r in reports
    ]
    header = ("identity_id", "result", "abs_err", "tolerance", "inputs")
    widths = [max(len(row[i]) for row in rows + [header]) for i in range(4)]
    lines = []
    for row in [header] + rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row[:4], widths)) + "  " + row[4])
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _show_defaults():
    lines = [f"defaults version {DEFAULTS_VERSION} (seed {DEFAULT_SEED})"]
    for name in IDENTITIES:
        opts = " ".join(f"{k}={fmt(v) if isinstance(v, float) else v}" for k, v in DEFAULTS[name].items())
        lines.append(f"{name:12s} {opts}")
    return "\n".join(lines) + "\n"


def cmd_verify(args):
    if args.show_defaults:
        _emit(_show_defaults(), args.out)
        return 0
    overrides = {"terms": args.terms, "tol": args.tol, "seed": args.seed, "samples": args.samples}
    reports = run_verify(args.identity, overrides)
    if args.json:
        text = to_json([r.as_dict() for r in reports]) + "\n"
    else:
        text = _format_reports(reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_sample(args):
    if args.n < 0:
        raise TanpickError("--n must be nonnegative")
    rng = RandomSource(args.seed, args.stream)
    if args.kind == "x":
        values = sample_X(rng, TruncationSpec(args.trunc, False), args.n)
    elif args.kind == "y":
        values = sample_Y(rng, args.n)
    else:
        values = sample_skellam_direct(rng, args.n)
    text = "".join(fmt(v) + "\n" for v in values.tolist())
    _emit(text, args.out)
    return 0


def cmd_pmf(args):
    if args.max_k < 0:
        raise TanpickError("--max-k must be nonnegative")
    ks, pmf = skellam_pmf_table(args.max_k)
    if args.format == "json":
        text = to_json([{"k": int(k), "pmf": float(p)} for k, p in zip(ks, pmf)]) + "\n"
    else:
        text = "k,pmf\n" + "".join(f"{int(k)},{fmt(p)}\n" for k, p in zip(ks, pmf))
    _emit(text, args.out)
    return 0


def cmd_table(args):
    opts = {"steps": args.steps}
    if args.terms is not None:
        opts["terms"] = args.terms
    if args.table in ("eq5", "exponent"):
        opts.update(t_min=args.t_min, t_max=args.t_max)
    elif args.table == "eq7":
        opts.update(w_min=args.w_min, w_max=args.w_max)
    else:
        opts.update(re_min=args.re_min, re_max=args.re_max, im_min=args.im_min, im_max=args.im_max)
    _emit(run_table(args.table, **opts), args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="tanpick",
        description="Check the Pick representation of tan(1/z), its K-mapping and Laplace "
        "identities, and the Skellam law of Rademacher compound-Poisson blocks.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({backend_name()})")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity checks; exit 1 if any fails")
    v.add_argument("--identity", choices=IDENTITIES + ("all",), default="all")
    v.add_argument("--terms", type=int, help="series truncation N")
    v.add_argument("--tol", type=float, help="override every tolerance of the chosen checks")
    v.add_argument("--seed", type=int, help=f"Monte Carlo seed (default {DEFAULT_SEED})")
    v.add_argument("--samples", type=int, help="Monte Carlo sample count")
    v.add_argument("--json", action="store_true", help="emit a JSON array of reports")
    v.add_argument("--out", help="write to PATH instead of stdout")
    v.add_argument("--show-defaults", action="store_true", help="print the default tolerance table")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="write one sample per line")
    s.add_argument("kind", choices=("x", "y", "skellam"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--stream", type=int, default=0)
    s.add_argument("--trunc", type=int, default=DEFAULT_X_TERMS, help="number of blocks for x")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sample)

    m = sub.add_parser("pmf", help="exact PMF table")
    m.add_argument("dist", choices=("skellam",))
    m.add_argument("--max-k", type=int, default=30)
    m.add_argument("--format", choices=("csv", "json"), default="csv")
    m.add_argument("--out")
    m.set_defaults(func=cmd_pmf)

    t = sub.add_parser("table", help="comparison tables as CSV")
    t.add_argument("table", choices=tuple(HEADERS))
    t.add_argument("--steps", type=int, default=16)
    t.add_argument("--terms", type=int)
    t.add_argument("--t-min", type=float, default=0.25)
    t.add_argument("--t-max", type=float, default=4.0)
    t.add_argument("--w-min", type=float, default=1.25)
    t.add_argument("--w-max", type=float, default=5.0)
    t.add_argument("--re-min", type=float, default=-2.0)
    t.add_argument("--re-max", type=float, default=2.0)
    t.add_argument("--im-min", type=float, default=0.25)
    t.add_argument("--im-max", type=float, default=2.0)
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TanpickError, ValueError, OSError) as exc:
        print(f"tanpick: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: parameter parsing, suite dispatch and reports.

Scalar literals are exact: rationals as "3/2" or "-1", roots of unity as
"zeta_6^2", and "generic" for sampled rational specializations. Reports go
to stdout as JSON lines (one object per check) unless --format table is
given; exit status is 0 when everything passed, 1 on any failure, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from fractions import Fraction

from .center import center_basis, jm_center_span
from .combinatorics import enumerate_multipartitions
from .hecke import AlgebraContext
from .ktheory import restriction_table, verify_blocks, verify_main_theorem
from .reports import VerificationReport, summarize
from .rings import CyclotomicDomain, RationalDomain
from .suites import (
    generic_contexts,
    main_theorem_coverage,
    pbw_dimension_report,
    suite_hilb_fg06,
    suite_main_theorem,
    suite_pairing,
    suite_q1_gap,
)

_ZETA_RE = re.compile(r"^zeta_(\d+)(?:\^(-?\d+))?$")


class UsageError(Exception):
    pass


def parse_scalar(text):
    """("rational", Fraction) | ("zeta", order, power) | ("generic",)."""
    text = text.strip()
    if text == "generic":
        return ("generic",)
    match = _ZETA_RE.match(text)
    if match:
        order = int(match.group(1))
        power = int(match.group(2)) if match.group(2) else 1
        if order < 1:
            raise UsageError(f"bad root-of-unity order in {text!r}")
        return ("zeta", order, power)
    try:
        return ("rational", Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed scalar literal {text!r}: {exc}") from exc


def build_domain_and_values(q_spec, Q_specs):
    """Assemble a common domain and the parameter images from literals; all
    root-of-unity literals must share one order."""
    orders = {s[1] for s in [q_spec] + Q_specs if s[0] == "zeta"}
    if len(orders) > 1:
        raise UsageError(
            "all roots of unity in one specialization must share an order")
    if orders:
        domain = CyclotomicDomain(orders.pop())

        def convert(spec):
            if spec[0] == "zeta":
                return domain.zeta(spec[2])
            return domain.from_fraction(spec[1])
    else:
        domain = RationalDomain()

        def convert(spec):
            return Fraction(spec[1])
    return domain, convert(q_spec), [convert(s) for s in Q_specs]


def _emit(reports, args):
    out = sys.stdout
    for report in reports:
        if args.format != "table":  # csv only applies to table exports
            out.write(report.to_json() + "\n")
        else:
            head = f"[{report.status.upper():4s}] {report.check}"
            details = " ".join(
                f"{k}={v}" for k, v in sorted(report.params.items())
                if not isinstance(v, (list, dict)))
            out.write(f"{head} {details}\n")
            for w in report.witnesses:
                out.write(f"    witness: {w}\n")
        if args.timings:
            sys.stderr.write(
                f"# {report.check}: {report.duration:.3f}s\n")
    passed, failed, skipped = summarize(reports)
    if args.format == "table":
        out.write(f"{passed} passed, {failed} failed, {skipped} skipped\n")
    return 0 if failed == 0 else 1


def _cache_dir(args):
    if args.no_cache:
        return None
    if args.cache_dir:
        return args.cache_dir
    return os.environ.get("CYCLOHECKE_CACHE")


def _parse_charge(text, r):
    try:
        charge = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad multicharge {text!r}") from exc
    if len(charge) != r:
        raise UsageError("multicharge length must equal r")
    return charge


def _parse_Q_list(text, r):
    specs = [parse_scalar(x) for x in text.split(",")]
    if len(specs) != r:
        raise UsageError("need one Q literal per level")
    return specs


def cmd_verify_main(args):
    if args.n is not None:
        reports = [verify_main_theorem(args.n, args.r or 1)]
    elif args.jobs > 1:
        import concurrent.futures
        pairs = main_theorem_coverage(budget=args.budget)
        with concurrent.futures.ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(_main_theorem_job, pairs))
    else:
        reports = suite_main_theorem(budget=args.budget)
    return _emit(reports, args)


def _main_theorem_job(pair):
    return verify_main_theorem(*pair)


def cmd_hilb(args):
    specs = [parse_scalar(x) for x in args.q_values.split(",")]
    for spec in specs:
        if spec[0] == "generic":
            raise UsageError("hilb takes explicit q literals")
        if spec[0] == "rational" and spec[1] == 1:
            raise UsageError("hilb requires q != 1")
    reports = [suite_hilb_fg06(args.n, specs, seed=args.seed,
                               cache_dir=_cache_dir(args))]
    return _emit(reports, args)


def cmd_blocks(args):
    if args.ell is None or args.ell < 2:
        raise UsageError("blocks requires --ell >= 2")
    charge = _parse_charge(args.charge, args.r)
    reports = [verify_blocks(args.n, args.r, args.ell, charge,
                             seed=args.seed, cache_dir=_cache_dir(args))]
    return _emit(reports, args)


def cmd_q1_gap(args):
    Q_vals = None
    if args.Q:
        specs = _parse_Q_list(args.Q, args.r)
        if any(s[0] != "rational" for s in specs):
            raise UsageError("q1-gap takes rational Q literals")
        Q_vals = [s[1] for s in specs]
    reports = [suite_q1_gap(args.n, args.r, Q_vals, seed=args.seed,
                            cache_dir=_cache_dir(args))]
    return _emit(reports, args)


def cmd_pairing(args):
    reports = [suite_pairing(args.n, args.r, trials=args.trials,
                             seed=args.seed, samples=args.samples,
                             cache_dir=_cache_dir(args))]
    return _emit(reports, args)


def cmd_center(args):
    import time
    start = time.time()
    q_spec = parse_scalar(args.q)
    Q_specs = _parse_Q_list(args.Q, args.r)
    results = []
    if q_spec[0] == "generic" or any(s[0] == "generic" for s in Q_specs):
        if not (q_spec[0] == "generic"
                and all(s[0] == "generic" for s in Q_specs)):
            raise UsageError("mix of generic and explicit literals")
        contexts = generic_contexts(args.n, args.r, args.seed, args.samples,
                                    cache_dir=_cache_dir(args))
        label = "generic (sampled)"
    else:
        domain, q_val, Q_vals = build_domain_and_values(q_spec, Q_specs)
        contexts = [AlgebraContext(args.n, args.r, domain, q_val, Q_vals,
                                   cache_dir=_cache_dir(args))]
        label = "explicit"
    for ctx in contexts:
        dim_center = len(center_basis(ctx))
        span = jm_center_span(ctx)
        results.append({
            "q": str(ctx.q_val), "Q": [str(Q) for Q in ctx.Q_vals],
            "dim_center": dim_center, "dim_jm_center": span.rank,
            "jm_span_capped": span.capped,
        })
    report = VerificationReport(
        check="center_dimensions",
        params={"n": args.n, "r": args.r, "specialization": label,
                "results": results},
        status="pass",
        seed=args.seed,
        duration=time.time() - start,
    )
    return _emit([report], args)


def cmd_table(args):
    table = restriction_table(args.n, args.r)
    text = table.to_csv() if args.format == "csv" else table.to_json() + "\n"
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_dims(args):
    inner = pbw_dimension_report(args.n, args.r)
    inner.params["multipartitions"] = len(
        enumerate_multipartitions(args.n, args.r))
    return _emit([inner], args)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cyclohecke",
        description="exact verification suites for cyclotomic Hecke algebras "
                    "and Gieseker fixed-point K-theory")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=3,
                        help="random specializations per generic claim")
    parser.add_argument("--trials", type=int, default=1000,
                        help="random trials for property checks")
    parser.add_argument("--format", choices=["json", "table", "csv"],
                        default="json")
    parser.add_argument("--cache-dir", default=None)
    parser.add_argument("--no-cache", action="store_true",
                        help="force rebuild of multiplication matrices")
    parser.add_argument("--timings", action="store_true",
                        help="print wall-clock durations to stderr")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for independent checks")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("verify-main", help="main theorem identity")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--budget", type=int, default=400)
    p.set_defaults(func=cmd_verify_main)

    p = sub.add_parser("hilb", help="Hilbert scheme corollary (r = 1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q-values", default="2,-1,zeta_3")
    p.set_defaults(func=cmd_hilb)

    p = sub.add_parser("blocks", help="block decomposition at a root of unity")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--charge", required=True,
                   help="comma-separated multicharge, one entry per level")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("q1-gap", help="q = 1 invariant-dimension gap")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--Q", default=None,
                   help="comma-separated distinct rational parameters")
    p.set_defaults(func=cmd_q1_gap)

    p = sub.add_parser("pairing", help="trace pairing and cocenter checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("center", help="center and JM-center dimensions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--Q", required=True)
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("table", help="export a restriction table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("dims", help="dimension bookkeeping")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_dims)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

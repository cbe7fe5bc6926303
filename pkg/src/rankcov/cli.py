"""Command-line front end.

Subcommands: bound (single-parameter report), table (grid reproduction
and golden diff), verify (skip-vector file against a target radius),
construct (mrd / gabidulin / jsl / local / embed, always re-verified
before writing), intersect and volume (exact counts).

Exit codes: 0 success or verified, 1 verification failed, 2 usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as B
from . import codes, search, tables
from .fields import Field, parse_field_spec
from .gf2 import DEFAULT_CAP, EnumerationCapError
from .qcombinatorics import (
    ball_volume,
    intersection_bruteforce,
    intersection_complementary,
    intersection_ball_radius1,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _add_params(p: argparse.ArgumentParser, rho: bool = True) -> None:
    p.add_argument("-q", type=int, default=2, help="prime base field size")
    p.add_argument("-m", type=int, required=True, help="extension degree")
    p.add_argument("-n", type=int, required=True, help="code length")
    if rho:
        p.add_argument("-r", "--rho", type=int, required=True, help="covering radius")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rankcov", description=__doc__)
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (vectors)")
    ap.add_argument("--threads", type=int, default=1, help="worker threads for scans")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate every bound at one parameter set")
    _add_params(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-known", action="store_true", help="ignore registered explicit codes")
    p.add_argument("--refined-jsl", action="store_true", help="tight greedy-cover cutoff")
    p.add_argument("--no-bruteforce", action="store_true", help="closed-form intersections only")

    p = sub.add_parser("table", help="reproduce the bounds tables")
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--linear", action="store_true", help="linear-code dimension table")
    p.add_argument("--analytic-only", action="store_true", help="skip search constructions")
    p.add_argument("--diff", nargs="?", const="builtin", metavar="CSV",
                   help="compare against golden values (default: packaged tables)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="measure a skip-vector code file")
    p.add_argument("file", type=Path)
    p.add_argument("-r", "--rho", type=int, required=True, help="target covering radius")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="build a covering code and certificate")
    p.add_argument("method", choices=["mrd", "gabidulin", "jsl", "local", "embed"])
    _add_params(p, rho=False)
    p.add_argument("-r", "--rho", type=int, help="covering radius target")
    p.add_argument("-d", type=int, help="minimum distance (mrd)")
    p.add_argument("-k", type=int, help="dimension (gabidulin)")
    p.add_argument("-s", type=int, default=1, help="Frobenius stride (gabidulin)")
    p.add_argument("-u", type=int, help="field extension steps (embed)")
    p.add_argument("-K", type=int, help="code size (local search)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=20)
    p.add_argument("--iterations", type=int, default=200)
    p.add_argument("-o", "--output", type=Path, help="skip-vector output path")

    p = sub.add_parser("intersect", help="two-ball intersection volume")
    _add_params(p, rho=False)
    p.add_argument("-r", type=int, required=True, help="first radius")
    p.add_argument("-s", type=int, required=True, help="second radius")
    p.add_argument("-d", type=int, required=True, help="center distance")
    p.add_argument("--closed-form", action="store_true",
                   help="cross-check the closed forms where they apply")

    p = sub.add_parser("volume", help="ball volume V_r(q^m, n)")
    _add_params(p, rho=False)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--bounds", action="store_true", help="print the bracketing bounds too")
    return ap


def cmd_bound(args) -> int:
    opts = B.BoundOptions(
        allow_bruteforce_intersections=not args.no_bruteforce,
        cap=args.cap,
        jsl_cutoff="refined" if args.refined_jsl else "published",
        use_known_codes=not args.no_known,
        threads=args.threads,
    )
    report = B.best_bounds(args.q, args.m, args.n, args.rho, opts)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_OK


def cmd_table(args) -> int:
    golden_path = None if args.diff in (None, "builtin") else args.diff
    if args.linear:
        report = tables.linear_table_report(max_m=max(args.max_m, 4))
        if args.json:
            print(json.dumps({str(k): v for k, v in sorted(report.items())}, indent=2))
        else:
            print(tables.render_linear_table(report, max_m=max(args.max_m, 4)))
        if args.diff:
            issues = tables.diff_linear_table(max_m=max(args.max_m, 4), path=golden_path)
            _print_diff(issues)
            return EXIT_OK if not issues else EXIT_VERIFY_FAILED
        return EXIT_OK
    opts = B.BoundOptions(use_known_codes=not args.analytic_only, cap=args.cap)
    reports = tables.covering_table_report(max_m=args.max_m, options=opts)
    if args.json:
        print(json.dumps({str(k): r.to_dict() for k, r in sorted(reports.items())}, indent=2))
    else:
        print(tables.render_covering_table(reports, max_m=args.max_m))
    if args.diff:
        issues = tables.diff_covering_table(max_m=args.max_m, path=golden_path)
        _print_diff(issues)
        return EXIT_OK if not issues else EXIT_VERIFY_FAILED
    return EXIT_OK


def _print_diff(issues: list[str]) -> None:
    if issues:
        print(f"{len(issues)} mismatches:")
        for line in issues:
            print("  " + line)
    else:
        print("diff clean: every analytic entry reproduced")


def cmd_verify(args) -> int:
    try:
        text = args.file.read_text()
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        code = codes.skip_vector_loads(text)
    except ValueError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    radius = codes.covering_radius(code, cap=args.cap, threads=args.threads)
    dist = codes.min_rank_distance(code) if code.size >= 2 else None
    result = {
        "file": str(args.file),
        "field": code.field.spec_string(),
        "n": code.n,
        "K": code.size,
        "covering_radius": radius,
        "min_distance": dist,
        "target_rho": args.rho,
        "verified": radius <= args.rho,
    }
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        print(f"|C| = {code.size}, covering radius = {radius}, min distance = {dist}")
        print("PASS" if result["verified"] else f"FAIL: radius {radius} > target {args.rho}")
    return EXIT_OK if result["verified"] else EXIT_VERIFY_FAILED


def cmd_construct(args) -> int:
    method = args.method
    rho = args.rho
    if method == "mrd":
        if args.d is None:
            print("construct mrd requires -d", file=sys.stderr)
            return EXIT_USAGE
        code = codes.mrd_construct(args.q, args.m, args.n, args.d)
        rho = rho if rho is not None else args.n  # no covering target implied
    elif method == "gabidulin":
        if args.k is None:
            print("construct gabidulin requires -k", file=sys.stderr)
            return EXIT_USAGE
        code = codes.gabidulin_generator(Field(args.q, args.m), args.n, args.k, args.s)
        rho = rho if rho is not None else args.n - args.k
    elif method == "jsl":
        if rho is None:
            print("construct jsl requires -r", file=sys.stderr)
            return EXIT_USAGE
        code = search.jsl_construct(args.q, args.m, args.n, rho, cap=args.cap)
    elif method == "local":
        if rho is None or args.K is None:
            print("construct local requires -r and -K", file=sys.stderr)
            return EXIT_USAGE
        budget = search.SearchBudget(
            max_iterations=args.iterations, max_restarts=args.restarts, random_seed=args.seed
        )
        maybe = search.local_search(args.q, args.m, args.n, rho, args.K, budget, cap=args.cap)
        if maybe is None:
            print("local search exhausted its budget without a covering", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        code = maybe
    elif method == "embed":
        if rho is None or args.u is None:
            print("construct embed requires -r and -u", file=sys.stderr)
            return EXIT_USAGE
        if not 0 <= args.u <= rho:
            print("embed preserves the radius only for 0 <= u <= rho", file=sys.stderr)
            return EXIT_USAGE
        base = codes.mrd_construct(args.q, args.m, args.n, rho + 1)
        code = codes.field_embed(base, args.u)
    else:  # pragma: no cover
        return EXIT_USAGE

    cert = search.certificate(code, rho if rho is not None else code.n, method, args.seed)
    out = args.output or Path(f"{method}_q{args.q}_m{code.field.m}_n{code.n}.sv")
    out.write_text(codes.skip_vector_dumps(code))
    out.with_suffix(".json").write_text(json.dumps(cert, indent=2) + "\n")
    print(f"wrote {out} ({code.size} codewords) and {out.with_suffix('.json')}")
    print(f"measured covering radius: {cert['radius_measured']}")
    return EXIT_OK if cert["radius_verified"] else EXIT_VERIFY_FAILED


def cmd_intersect(args) -> int:
    value = intersection_bruteforce(
        args.q, args.m, args.n, args.r, args.s, args.d, cap=args.cap, threads=args.threads
    )
    print(value)
    if args.closed_form:
        checks = []
        if args.s == 1 and args.d == args.r:
            checks.append(("radius-1 closed form", intersection_ball_radius1(args.q, args.m, args.n, args.r)))
        if args.d == args.r + args.s:
            checks.append(
                ("complementary closed form",
                 intersection_complementary(args.q, args.m, args.n, args.d, args.r))
            )
        for name, v in checks:
            status = "agrees" if v == value else f"DISAGREES ({v})"
            print(f"{name}: {status}")
            if v != value:
                return EXIT_VERIFY_FAILED
        if not checks:
            print("no closed form applies at this (r, s, d)")
    return EXIT_OK


def cmd_volume(args) -> int:
    v = ball_volume(args.q, args.m, args.n, args.r)
    print(v)
    if args.bounds:
        from .qcombinatorics import volume_bounds

        lo, hi = volume_bounds(args.q, args.m, args.n, args.r)
        print(f"bracket: {lo} <= {v} < {hi}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "bound": cmd_bound,
        "table": cmd_table,
        "verify": cmd_verify,
        "construct": cmd_construct,
        "intersect": cmd_intersect,
        "volume": cmd_volume,
    }
    try:
        return handlers[args.command](args)
    except EnumerationCapError as exc:
        print(f"refusing: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

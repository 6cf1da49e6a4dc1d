"""Command-line front end: ``parideal {roots,antichains,verify,classify}``.

Exit codes: 0 success, 1 a verification claim failed, 2 usage error,
3 the requested system is above a suite's scale cap.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .irreducible import ScaleCapError, classify
from .poset_ideals import enumerate_J_antichains, nodeset
from .rootsys import ConfigurationError, RootSystemSpec, UnsupportedError, build_root_system, height
from .verify import DEFAULT_MAX_ROOTS, SCHEMA, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _vec(v) -> list:
    return [_num(x) for x in v]


def _vec_text(v) -> str:
    return "(" + ",".join(str(_num(x)) for x in v) + ")"


def _dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _system(args):
    try:
        return build_root_system(RootSystemSpec(args.type, args.rank))
    except ConfigurationError as exc:
        raise UsageError(str(exc)) from exc


def _parse_J(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(sorted({int(t) for t in text.split(",") if t.strip()}))
    except ValueError as exc:
        raise UsageError(f"bad node list {text!r}") from exc


def cmd_roots(args, out) -> int:
    rs = _system(args)
    if args.epsilon and rs.family not in "ABCD":
        raise UsageError(f"epsilon coordinates are only defined for types A-D, not {rs.family}")
    rows = []
    for a in rs.positive_roots:
        row = {"coeffs": list(a), "height": height(a), "theta": a == rs.theta}
        if args.epsilon:
            row["epsilon"] = _vec(rs.to_epsilon(a))
        rows.append(row)
    if args.format == "json":
        out(_dump_json({"schema": SCHEMA, "command": "roots", "system": str(rs.spec),
                        "theta": list(rs.theta), "count": len(rows), "roots": rows}))
    elif args.format == "csv":
        header = ["coeffs", "height", "theta"] + (["epsilon"] if args.epsilon else [])
        out(_csv_text(header, [
            [" ".join(map(str, r["coeffs"])), r["height"], int(r["theta"])]
            + ([" ".join(map(str, r["epsilon"]))] if args.epsilon else [])
            for r in rows
        ]))
    else:
        out(f"{rs.spec}: {len(rows)} positive roots, theta = {_vec_text(rs.theta)}")
        for r in rows:
            line = f"  {_vec_text(r['coeffs'])}  ht {r['height']}"
            if args.epsilon:
                line += "  eps " + _vec_text(r["epsilon"])
            if r["theta"]:
                line += "  <- theta"
            out(line)
    return EXIT_OK


def cmd_antichains(args, out) -> int:
    rs = _system(args)
    J = _parse_J(args.J)
    try:
        J = nodeset(rs, J)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.size is not None and args.size < 0:
        raise UsageError("--size must be nonnegative")
    found = enumerate_J_antichains(rs, J, abelian_only=args.abelian, size=args.size, workers=args.threads)
    if args.format == "json":
        out(_dump_json({"schema": SCHEMA, "command": "antichains", "system": str(rs.spec),
                        "J": sorted(J), "abelian": args.abelian, "size": args.size,
                        "antichains": [[list(a) for a in A] for A in found], "count": len(found)}))
    elif args.format == "csv":
        out(_csv_text(["index", "size", "roots"],
                      [[k, len(A), " ".join(_vec_text(a) for a in A)] for k, A in enumerate(found)]))
    else:
        for A in found:
            out("{" + ", ".join(_vec_text(a) for a in A) + "}")
        out(f"count: {len(found)}")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rs = _system(args)
    report = run_suite(rs, args.suite, max_rank=args.max_rank, max_roots=args.max_roots)
    if args.format == "json":
        out(_dump_json(report))
    elif args.format == "csv":
        out(_csv_text(["claim", "instances_checked", "failure_count"], [
            [c["claim"], c.get("instances_checked", ""), c.get("failure_count", "")] for c in report["claims"]
        ]))
    else:
        out(f"{report['suite']} on {report['system']}: {'pass' if report['passed'] else 'FAIL'}")
        for c in report["claims"]:
            extra = {k: v for k, v in c.items()
                     if k not in ("claim", "instances_checked", "failure_count", "failures")}
            line = f"  {c['claim']}:"
            if "instances_checked" in c:
                line += f" {c['instances_checked']} checked, {c['failure_count']} failures"
            if extra:
                line += " " + json.dumps(extra, sort_keys=True)
            out(line)
            for f in c.get("failures", [])[:3]:
                out(f"    counterexample: {json.dumps(f, sort_keys=True)}")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_classify(args, out) -> int:
    rs = _system(args)
    rows = classify(rs, with_conditions=True)
    if args.format == "json":
        out(_dump_json({"schema": SCHEMA, "command": "classify", "system": str(rs.spec),
                        "count": len(rows), "sets": rows}))
    elif args.format == "csv":
        out(_csv_text(["family", "I", "J", "size", "two_rho", "all_conditions"], [
            [r["family"], " ".join(map(str, r["I"])), " ".join(map(str, r["J"])), r["size"],
             " ".join(map(str, r["two_rho"])), int(r["all_conditions"])]
            for r in rows
        ]))
    else:
        out(f"{rs.spec}: {len(rows)} admissible sets")
        for r in rows:
            out(f"  [{r['family']}] I={r['I']} J={r['J']} size {r['size']} "
                f"2rho={_vec_text(r['two_rho'])} conditions={'ok' if r['all_conditions'] else 'FAIL'}")
    bad = any(not r["all_conditions"] or r["family"] == "unmatched" for r in rows)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parideal", description="Ad-nilpotent ideal combinatorics of root systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def system_args(p):
        p.add_argument("--type", required=True, help="root system family A-G")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p = sub.add_parser("roots", help="list positive roots")
    system_args(p)
    p.add_argument("--epsilon", action="store_true", help="add orthonormal coordinates (types A-D)")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("antichains", help="enumerate J-antichains")
    system_args(p)
    p.add_argument("--J", help="comma-separated node indices, e.g. 1,3")
    p.add_argument("--abelian", action="store_true")
    p.add_argument("--size", type=int)
    p.add_argument("--threads", type=int, help="worker processes (default: PARIDEAL_THREADS or 1)")
    p.set_defaults(func=cmd_antichains)

    p = sub.add_parser("verify", help="run a verification suite")
    system_args(p)
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-rank", type=int, help="rank cap (suite default if omitted)")
    p.add_argument("--max-roots", type=int, default=DEFAULT_MAX_ROOTS, help="|R| cap for theorem2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="list admissible sets S with family labels")
    system_args(p)
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or print
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (UsageError, UnsupportedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleCapError as exc:
        print(f"scale cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())

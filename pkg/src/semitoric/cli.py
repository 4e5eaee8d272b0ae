"""Command-line batch interface.

Exit codes for ``check``: 0 Hartogs, 1 not Hartogs, 2 hypothesis violated
(complete fan or several ends), 3 parse or validation error, 4 cross-check
disagreement. With several files the largest code wins.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .cone import cone_from_ineqs, cone_from_rays, is_trivial, restrict_to_subspace
from .fan import CompleteFan, complement_closure_dual, count_ends, validate_fan
from .formats import ParseError, cone_from_json, cone_to_json, end_to_json, load, verdict_to_json
from .hartogs import (
    MultipleEnds,
    SemiabelianProblem,
    Sublattice,
    decide,
    per_end_diagnostic,
    verify_witness,
)
from .oracle import BoxSpec, cross_check

HARTOGS, NOT_HARTOGS, HYPOTHESIS, INVALID, DISAGREE = 0, 1, 2, 3, 4
WORKERS_ENV = "SEMITORIC_WORKERS"


def _fmt(v) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def _load_valid(path):
    pf = load(path)
    problems = validate_fan(pf.fan, strict=True)
    if problems:
        raise ParseError("invalid fan: " + "; ".join(problems))
    return pf


def check_file(path: str, toric: bool = False, cross: bool = False, box: int = 8) -> dict:
    """Run one decision and return its report; ``exit_code`` is part of it."""
    report = {"file": path}
    try:
        pf = _load_valid(path)
    except (ParseError, ValueError) as e:
        report.update(status="error", exit_code=INVALID, message=str(e))
        return report
    report["name"] = pf.name
    problem = pf.problem
    if toric or problem is None:
        problem = SemiabelianProblem(pf.fan.rank, None, (), pf.fan)
    try:
        verdict = decide(problem)
    except CompleteFan:
        report.update(status="hypothesis", exit_code=HYPOTHESIS,
                      message="complete fan: the complement of |Σ| is empty")
        return report
    except MultipleEnds as e:
        report.update(status="hypothesis", exit_code=HYPOTHESIS, end_count=e.count,
                      message=f"multiple ends: the complement of |Σ| has {e.count} components",
                      per_end=[end_to_json(d) for d in per_end_diagnostic(pf.fan)])
        return report
    report.update(verdict_to_json(verdict))
    report["status"] = "hartogs" if verdict.hartogs else "not-hartogs"
    report["exit_code"] = HARTOGS if verdict.hartogs else NOT_HARTOGS
    if pf.expected is not None:
        report["expected_ok"] = pf.expected == report["status"]
    if cross:
        issues = cross_check(problem, verdict, BoxSpec(box, problem.torus_rank))
        report["cross_check"] = {"box": box, "disagreements": issues}
        if issues:
            report["exit_code"] = DISAGREE
    return report


def _text_report(r: dict, explain: bool) -> list[str]:
    head = f"{r['file']}: "
    if r["status"] == "error":
        return [head + "error: " + r["message"]]
    if r["status"] == "hypothesis":
        lines = [head + "hypothesis violated: " + r["message"]]
        if explain:
            for d in r.get("per_end", []):
                C = d["C"]
                lines.append(f"  end {d['component']}: {d['cells']} cells, C_i rays "
                             f"{[_fmt(x) for x in C['rays']]}"
                             + ("  (C_i = 0: sufficient-condition candidate)" if d["candidate"] else ""))
        return lines
    if r["hartogs"]:
        lines = [head + "HARTOGS"]
    else:
        lines = [head + "NOT HARTOGS  witness " + _fmt(r["witness"])]
    if explain:
        C = r["C"]
        lines.append(f"  C rays: {[_fmt(x) for x in C['rays']]}")
        lines.append(f"  C lineality: {[_fmt(x) for x in C['lineality']]}")
        lines.append(f"  L basis: {[_fmt(x) for x in r['L_basis']]}")
        lines.append(f"  ends: {r['end_count']}")
        for d in r["per_end"]:
            lines.append(f"  end {d['component']}: C_i rays {[_fmt(x) for x in d['C']['rays']]}")
    if r.get("expected_ok") is False:
        lines.append("  warning: verdict differs from the file's expected value")
    if "cross_check" in r:
        issues = r["cross_check"]["disagreements"]
        lines.append("  cross-check: " + ("ok" if not issues else "; ".join(issues)))
    return lines


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def cmd_check(args) -> int:
    jobs = [(p, args.toric, args.cross_check, args.box) for p in args.files]
    if len(jobs) > 1 and _workers() > 1:
        with ProcessPoolExecutor(_workers()) as pool:
            reports = list(pool.map(_check_star, jobs))
    else:
        reports = [_check_star(j) for j in jobs]
    if args.json:
        out = reports[0] if len(reports) == 1 else reports
        print(json.dumps(out, indent=2))
    else:
        for r in reports:
            print("\n".join(_text_report(r, args.explain)))
    return max(r["exit_code"] for r in reports)


def _check_star(job):
    return check_file(*job)


def cmd_ends(args) -> int:
    try:
        pf = _load_valid(args.file)
        ends = count_ends(pf.fan)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    except CompleteFan:
        print("complete fan: the complement of |Σ| is empty")
        return HYPOTHESIS
    if args.json:
        print(json.dumps({"ends": ends.count, "component_sizes": list(ends.component_sizes)}))
    else:
        print(f"ends: {ends.count}")
        for k, size in enumerate(ends.component_sizes):
            print(f"  component {k}: {size} cells")
    return 0


def cmd_dual(args) -> int:
    try:
        pf = _load_valid(args.file)
        C = complement_closure_dual(pf.fan)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    except CompleteFan:
        print("complete fan: the complement of |Σ| is empty")
        return HYPOTHESIS
    if args.json:
        print(json.dumps(cone_to_json(C)))
    else:
        for key, vecs in (("rays", C.rays), ("lineality", C.lineality),
                          ("ineqs", C.ineqs), ("equalities", C.equalities)):
            print(f"{key}: [{', '.join(_fmt(v) for v in vecs)}]")
    return 0


def validate_certificate(obj: dict) -> list[str]:
    """Re-check a ``check --json`` report from its printed C and L data alone."""
    C = cone_from_json(obj["C"])
    n = C.ambient_rank
    issues = []
    if cone_from_rays(n, C.rays, C.lineality) != C or cone_from_ineqs(n, C.ineqs, C.equalities) != C:
        issues.append("C's two representations disagree")
    L = Sublattice(n, tuple(tuple(r) for r in obj["L_basis"]))
    if obj["hartogs"]:
        if not is_trivial(restrict_to_subspace(C, L.basis)):
            issues.append("L and C meet outside the origin")
    else:
        w = obj.get("witness")
        if w is None or len(w) != n or not verify_witness(tuple(w), L, C):
            issues.append(f"witness {w} fails: need w != 0, w in L, w in C")
    return issues


def cmd_validate(args) -> int:
    try:
        with open(args.file) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    reports = obj if isinstance(obj, list) else [obj]
    if all(isinstance(r, dict) and "C" in r and "L_basis" in r for r in reports):
        code = 0
        for r in reports:
            try:
                issues = validate_certificate(r)
            except (KeyError, TypeError, ParseError, ValueError) as e:
                issues = [f"malformed certificate: {e}"]
            label = r.get("file", "certificate")
            print(f"{label}: " + ("certificate valid" if not issues else "; ".join(issues)))
            code = max(code, INVALID if issues else 0)
        return code
    try:
        pf = load(args.file)
    except (ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    problems = validate_fan(pf.fan, strict=True)
    for p in problems:
        print(f"violation: {p}")
    if not problems:
        print(f"valid fan of rank {pf.fan.rank}: {len(pf.fan.rays)} rays, {len(pf.fan.cones)} cones, "
              f"smooth={pf.fan.is_smooth()}")
    return INVALID if problems else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semitoric",
                                     description="Hartogs criterion for semiabelian and toric data")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide the Hartogs property")
    p.add_argument("files", nargs="+")
    p.add_argument("--toric", action="store_true", help="ignore L0/torsion and decide for Y itself")
    p.add_argument("--cross-check", action="store_true", help="compare against brute-force oracles")
    p.add_argument("--box", type=int, default=8, help="oracle box radius (default 8)")
    p.add_argument("--explain", action="store_true", help="print C, L, and per-end data")
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ends", help="count components of the fan complement")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ends)

    p = sub.add_parser("dual", help="print C, the dual of the closed complement")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("validate", help="validate a fan/problem file or a JSON certificate")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance suite: one pass/fail line per criterion, written straight to the terminal.

Run alone with ``python3 -m pytest tests/test_acceptance.py -v`` (or execute
this file). Criterion 6 re-checks every non-Hartogs certificate collected by
criteria 1, 3 and 5, so run the module as a whole for full coverage.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from semitoric.cone import cone_from_ineqs, cone_from_rays, contains, contains_cone, dual, is_trivial
from semitoric.fan import CompleteFan, Fan, count_ends, validate_fan
from semitoric.formats import load
from semitoric.hartogs import MultipleEnds, SemiabelianProblem, Verdict, decide, decide_toric
from semitoric.linalg import dot
from semitoric.oracle import BoxSpec, cross_check, in_lattice, oracle_ends_2d
from semitoric.randomgen import (
    integer_inverse,
    random_fan,
    random_fan_2d,
    random_sublattice_data,
    random_unimodular,
    transform_covector,
    transform_vector,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SEED = 20261014

# every non-Hartogs verdict seen by this module, for criterion 6
CERTIFICATES: list[tuple[str, Verdict]] = []


@pytest.fixture
def report(capsys):
    def emit(k, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {k}: {title}" + (f"  ({detail})" if detail else ""))
    return emit


def certificate_holds(v: Verdict) -> bool:
    """Independent re-check: w != 0, exact rational solve in L, H-rep of C."""
    if v.hartogs:
        return v.witness is None and is_trivial(v.restricted)
    w = v.witness
    return (w is not None and any(w)
            and in_lattice(v.L.basis, w)
            and all(dot(a, w) >= 0 for a in v.C.ineqs)
            and all(dot(e, w) == 0 for e in v.C.equalities))


def certified(label, v: Verdict) -> Verdict:
    assert certificate_holds(v), f"{label}: certificate fails for witness {v.witness}"
    if not v.hartogs:
        CERTIFICATES.append((label, v))
    return v


def one_end_fan(rng, n):
    """Draw fans until one satisfies the criterion's hypotheses; count the gated draws."""
    gated = 0
    while True:
        fan = random_fan(rng, n)
        try:
            ends = count_ends(fan).count
        except CompleteFan:
            ends = 0
        if ends == 1:
            return fan, gated
        gated += 1
        with pytest.raises((CompleteFan, MultipleEnds)):
            decide(SemiabelianProblem(n, None, (), fan))


Y1 = Fan(2, ((1, 0), (-1, 0), (0, 1)), ((0, 2), (1, 2)))
Y2 = Fan(2, ((0, 1), (0, -1), (1, 0)), ((2, 0), (2, 1)))


def test_criterion_1_reproduction(report):
    t0 = time.perf_counter()
    p1 = SemiabelianProblem(2, ((0, 1),), (), Y1)
    p2 = SemiabelianProblem(2, ((0, 1),), (), Y2)
    v1, v2 = certified("Y1 semiabelian", decide(p1)), certified("Y2 semiabelian", decide(p2))
    t1, t2 = certified("Y1 toric", decide_toric(Y1)), certified("Y2 toric", decide_toric(Y2))
    elapsed = time.perf_counter() - t0
    checks = {
        "Y1 not Hartogs": not v1.hartogs,
        "Y1 witness (0,-k)": v1.witness is not None and v1.witness[0] == 0 and v1.witness[1] < 0,
        "Y2 Hartogs": v2.hartogs and v2.witness is None,
        "toric Y1, Y2 not Hartogs": not t1.hartogs and not t2.hartogs,
        "L basis {(0,1)}": v1.L.basis == ((0, 1),) and v2.L.basis == ((0, 1),),
        "C(Y1) = ray (0,-1)": v1.C.rays == ((0, -1),) and v1.C.lineality == (),
        "C(Y2) = ray (-1,0)": v2.C.rays == ((-1, 0),) and v2.C.lineality == (),
        "runtime < 1 s": elapsed < 1.0,
    }
    bad = [k for k, ok in checks.items() if not ok]
    report(1, "worked-example reproduction", not bad,
           f"witness {v1.witness}, {elapsed:.3f} s" + (f"; failed: {bad}" if bad else ""))
    assert not bad


def test_criterion_2_duality(report):
    rng = random.Random(SEED + 2)
    t0 = time.perf_counter()
    failures = []
    for trial in range(500):
        n = rng.randint(1, 4)
        gens = [tuple(rng.randint(-5, 5) for _ in range(n)) for _ in range(rng.randint(1, 6))]
        C = cone_from_rays(n, gens)
        DD = dual(dual(C))
        if not (contains_cone(DD, C) and contains_cone(C, DD)):
            failures.append((trial, "containment", gens))
        elif not all(contains(DD, g) for g in C.generators()) or not all(contains(C, g) for g in DD.generators()):
            failures.append((trial, "generators", gens))
        if DD != C:
            failures.append((trial, "dual(dual(C)) != C", gens))
        H = cone_from_ineqs(n, C.ineqs, C.equalities)
        V = cone_from_rays(n, H.rays, H.lineality)
        if (H.rays, H.lineality) != (C.rays, C.lineality) or V != C:
            failures.append((trial, "V->H->V", gens))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    report(2, "duality involution and DD round trip on 500 cones", ok,
           f"{len(failures)} failures, {elapsed:.1f} s")
    assert not failures, failures[:5]
    assert elapsed < 60


def test_criterion_3_oracle_equivalence(report):
    rng = random.Random(SEED + 3)
    box = 8
    t0 = time.perf_counter()
    failures, gated, verdicts = [], 0, {True: 0, False: 0}
    for trial in range(100):
        n = (1, 2, 2, 3, 3)[trial % 5]
        fan, g = one_end_fan(rng, n)
        gated += g
        for _ in range(3):
            L0, torsion = random_sublattice_data(rng, n)
            p = SemiabelianProblem(n, tuple(map(tuple, L0)), tuple(torsion), fan)
            v = certified(f"oracle trial {trial}", decide(p))
            verdicts[v.hartogs] += 1
            issues = cross_check(p, v, BoxSpec(box, n))
            if issues:
                failures.append((trial, issues))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    report(3, "one-sided agreement with box oracles (100 fans x 3 lattices, B = 8)", ok,
           f"{verdicts[True]} Hartogs, {verdicts[False]} not, {gated} gated draws redrawn, "
           f"{len(failures)} failures, {elapsed:.1f} s")
    assert not failures, failures[:3]
    assert elapsed < 120


def _fixture_fans_2d():
    out = []
    for path in sorted(FIXTURES.glob("*.json")):
        try:
            pf = load(path)
        except ValueError:
            continue
        if pf.fan.rank == 2 and not validate_fan(pf.fan):
            out.append((path.name, pf.fan))
    return out


def test_criterion_4_end_count_2d(report):
    rng = random.Random(SEED + 4)
    fans = []
    while len(fans) < 200:
        fan = random_fan_2d(rng) if len(fans) % 2 == 0 else random_fan(rng, 2)
        try:
            oracle_ends_2d(fan) if fan is not None else None
        except ValueError:
            continue  # complete: no ends to count
        if fan is not None:
            fans.append((f"random {len(fans)}", fan))
    failures, fixtures_used, complete = [], 0, 0
    for name, fan in fans + _fixture_fans_2d():
        try:
            exact = count_ends(fan).count
        except CompleteFan:
            complete += 1
            with pytest.raises(ValueError):
                oracle_ends_2d(fan)
            continue
        fixtures_used += not name.startswith("random")
        if exact != oracle_ends_2d(fan):
            failures.append(name)
    report(4, "2D end counts match the angular sweep", not failures,
           f"200 random + {fixtures_used} fixtures ({complete} complete fixture gated), {len(failures)} failures")
    assert not failures


def test_criterion_5_invariance(report):
    rng = random.Random(SEED + 5)
    failures = []
    for trial in range(50):
        n = rng.randint(1, 3)
        fan, _ = one_end_fan(rng, n)
        L0, torsion = random_sublattice_data(rng, n)
        base = certified(f"invariance {trial}", decide(SemiabelianProblem(n, tuple(map(tuple, L0)),
                                                                          tuple(torsion), fan)))
        U = random_unimodular(rng, n)
        Ui = integer_inverse(U)
        moved = SemiabelianProblem(
            n,
            tuple(transform_covector(l, Ui) for l in L0),
            tuple(tuple(Fraction(x) for x in transform_vector(q, U)) for q in torsion),
            fan.transform(U))
        vm = certified(f"invariance {trial} transformed", decide(moved))
        scaled_fan = Fan(n, tuple(tuple(k * x for x in r) for r, k in
                                  ((r, rng.randint(1, 5)) for r in fan.rays)), fan.cones)
        vs = certified(f"invariance {trial} scaled",
                       decide(SemiabelianProblem(n, tuple(map(tuple, L0)), tuple(torsion), scaled_fan)))
        if not (base.hartogs == vm.hartogs == vs.hartogs):
            failures.append((trial, base.hartogs, vm.hartogs, vs.hartogs))
        # the transformed witness must land in the transformed cone
        if not base.hartogs and not contains(vm.C, transform_covector(base.witness, Ui)):
            failures.append((trial, "witness not carried along"))
    report(5, "unimodular and ray-scaling invariance on 50 problems", not failures,
           f"{len(failures)} failures")
    assert not failures, failures


def test_criterion_6_certificates(report):
    for path in sorted(FIXTURES.glob("*.json")):
        try:
            pf = load(path)
            if validate_fan(pf.fan):
                continue
            p = pf.problem or SemiabelianProblem(pf.fan.rank, None, (), pf.fan)
            certified(path.name, decide(p))
        except (ValueError, CompleteFan, MultipleEnds):
            continue
    bad = [label for label, v in CERTIFICATES if not certificate_holds(v)]
    report(6, "every non-Hartogs verdict carries a valid certificate", not bad and CERTIFICATES,
           f"{len(CERTIFICATES)} certificates checked, {len(bad)} invalid")
    assert CERTIFICATES and not bad


def test_criterion_7_gating(report):
    results = {}
    for name, needle in (("complete_p2.json", "complete fan"), ("two_ends.json", "multiple ends")):
        path = str(FIXTURES / name)
        text = subprocess.run([sys.executable, "-m", "semitoric", "check", path],
                              capture_output=True, text=True)
        js = subprocess.run([sys.executable, "-m", "semitoric", "check", "--json", path],
                            capture_output=True, text=True)
        r = json.loads(js.stdout)
        results[name] = (text.returncode == 2 and needle in text.stdout and "HARTOGS" not in text.stdout
                         and js.returncode == 2 and r["status"] == "hypothesis" and "hartogs" not in r)
    ok = all(results.values())
    report(7, "complete and two-end fans exit 2 with a diagnostic and no verdict", ok,
           ", ".join(f"{k}: {'ok' if v else 'bad'}" for k, v in results.items()))
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))

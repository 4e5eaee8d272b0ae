"""JSON problem files and report serialization.

Fan object::

    {"rank": n, "rays": [[int, ...], ...], "cones": [[ray-index, ...], ...]}

Problem object::

    {"torus_rank": n, "L0": [[int, ...], ...] | "full",
     "torsion": [["p/q", ...], ...], "fan": <fan object>}

Either may carry optional ``"name"`` and ``"expected"`` metadata.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cone import Cone
from .fan import Fan
from .hartogs import EndDiagnostic, SemiabelianProblem, Verdict
from .linalg import vec_gcd


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class ProblemFile:
    fan: Fan
    problem: SemiabelianProblem | None = None
    name: str | None = None
    expected: str | None = None


def _int(x, what):
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"{what}: expected an integer, got {x!r}")
    return x


def _int_vector(v, n, what):
    if not isinstance(v, list):
        raise ParseError(f"{what}: expected a list, got {v!r}")
    if n is not None and len(v) != n:
        raise ParseError(f"{what}: expected {n} entries, got {len(v)}")
    return tuple(_int(x, what) for x in v)


def _rational(x, what) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"{what}: expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"{what}: bad rational {x!r}") from e
    raise ParseError(f"{what}: rationals are written as \"p/q\" strings, got {x!r}")


def parse_fan(obj) -> Fan:
    if not isinstance(obj, dict):
        raise ParseError("fan must be a JSON object")
    try:
        n = _int(obj["rank"], "rank")
        rays_in = obj["rays"]
        cones_in = obj["cones"]
    except KeyError as e:
        raise ParseError(f"fan is missing key {e}") from None
    if n < 1:
        raise ParseError("rank must be positive")
    if not isinstance(rays_in, list) or not isinstance(cones_in, list):
        raise ParseError("rays and cones must be lists")
    rays = []
    for i, r in enumerate(rays_in):
        r = _int_vector(r, n, f"ray {i}")
        if not any(r):
            raise ParseError(f"ray {i} is zero")
        g = vec_gcd(r)
        if g != 1:
            warnings.warn(f"ray {i} {list(r)} is not primitive; divided by {g}", stacklevel=2)
        rays.append(r)
    cones = []
    for j, c in enumerate(cones_in):
        c = _int_vector(c, None, f"cone {j}")
        for i in c:
            if not 0 <= i < len(rays):
                raise ParseError(f"cone {j} refers to missing ray {i}")
        cones.append(c)
    return Fan(n, tuple(rays), tuple(cones))


def parse_problem(obj) -> ProblemFile:
    """Parse either a problem object or a bare fan object."""
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    name, expected = obj.get("name"), obj.get("expected")
    if "fan" not in obj:
        return ProblemFile(parse_fan(obj), None, name, expected)
    fan = parse_fan(obj["fan"])
    n = _int(obj.get("torus_rank", fan.rank), "torus_rank")
    if n != fan.rank:
        raise ParseError(f"torus_rank {n} does not match fan rank {fan.rank}")
    L0 = obj.get("L0", "full")
    if L0 == "full":
        gens = None
    elif isinstance(L0, list):
        gens = tuple(_int_vector(g, n, f"L0 row {i}") for i, g in enumerate(L0))
    else:
        raise ParseError("L0 must be a list of integer rows or \"full\"")
    torsion_in = obj.get("torsion", [])
    if not isinstance(torsion_in, list):
        raise ParseError("torsion must be a list")
    torsion = []
    for j, q in enumerate(torsion_in):
        if not isinstance(q, list) or len(q) != n:
            raise ParseError(f"torsion {j}: expected {n} rationals")
        torsion.append(tuple(_rational(x, f"torsion {j}") for x in q))
    problem = SemiabelianProblem(n, gens, tuple(torsion), fan)
    return ProblemFile(fan, problem, name, expected)


def load(path: str | Path) -> ProblemFile:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: invalid JSON ({e})") from e
    return parse_problem(obj)


def fan_to_json(fan: Fan) -> dict:
    return {"rank": fan.rank, "rays": [list(r) for r in fan.rays],
            "cones": [list(c) for c in fan.cones]}


def cone_to_json(C: Cone) -> dict:
    return {"rank": C.ambient_rank,
            "rays": [list(r) for r in C.rays],
            "lineality": [list(r) for r in C.lineality],
            "ineqs": [list(r) for r in C.ineqs],
            "equalities": [list(r) for r in C.equalities]}


def cone_from_json(obj) -> Cone:
    try:
        n = _int(obj["rank"], "rank")
        parts = [tuple(_int_vector(v, n, key) for v in obj[key])
                 for key in ("rays", "lineality", "ineqs", "equalities")]
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed cone: {e}") from None
    return Cone(n, *parts)


def end_to_json(d: EndDiagnostic) -> dict:
    return {"component": d.component, "cells": len(d.cells),
            "C": cone_to_json(d.cone), "candidate": d.candidate}


def verdict_to_json(v: Verdict) -> dict:
    return {"hartogs": v.hartogs,
            "witness": list(v.witness) if v.witness is not None else None,
            "L_basis": [list(r) for r in v.L.basis],
            "C": cone_to_json(v.C),
            "end_count": v.end_count,
            "per_end": [end_to_json(d) for d in v.per_end]}

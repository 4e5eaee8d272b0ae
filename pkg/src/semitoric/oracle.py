"""Brute-force baselines.

Everything here works by enumeration or from definitions and is kept apart
from the decision path: the test-suite and ``check --cross-check`` compare
against these.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cone import Cone
from .linalg import DimensionMismatch


@dataclass(frozen=True)
class BoxSpec:
    radius: int
    dimension: int

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("box radius must be at least 1")

    def points(self):
        """Lattice points of ``[-B, B]^n`` in lexicographic order."""
        return itertools.product(range(-self.radius, self.radius + 1), repeat=self.dimension)


def _solve_square(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve ``x @ A = b`` for ``A`` with independent rows; ``None`` if inconsistent."""
    k, n = len(A), len(b)
    # columns of the augmented system: unknowns x_0..x_{k-1}, one equation per coordinate
    M = [[A[i][j] for i in range(k)] + [b[j]] for j in range(n)]
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            return None
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [s - f * t for s, t in zip(M[i], M[r])]
        r += 1
    if any(M[i][k] != 0 for i in range(r, n)):
        return None
    return [M[i][k] for i in range(k)]


def rational_coordinates(basis: Sequence[Sequence[int]], v: Sequence) -> list[Fraction] | None:
    """Coordinates of ``v`` in an independent ``basis``, or ``None`` if outside the span."""
    if not basis:
        return [] if not any(v) else None
    A = [[Fraction(x) for x in row] for row in basis]
    return _solve_square(A, [Fraction(x) for x in v])


def in_lattice(basis: Sequence[Sequence[int]], v: Sequence) -> bool:
    """Membership in the lattice of an independent basis via exact rational solve."""
    c = rational_coordinates(basis, v)
    return c is not None and all(x.denominator == 1 for x in c)


def in_conic_hull(gens: Iterable[Sequence[int]], v: Sequence) -> bool:
    """Whether ``v`` is a nonnegative combination of ``gens``.

    Carathéodory: it suffices to try every linearly independent subset.
    """
    gens = [[Fraction(x) for x in g] for g in gens if any(g)]
    v = [Fraction(x) for x in v]
    if not any(v):
        return True
    n = len(v)
    for size in range(1, min(n, len(gens)) + 1):
        for subset in itertools.combinations(gens, size):
            sub = list(subset)
            if not _is_independent(sub):
                continue
            c = _solve_square(sub, v)
            if c is not None and all(x >= 0 for x in c):
                return True
    return False


def _is_independent(rows: list[list[Fraction]]) -> bool:
    # independent iff the only solution of x @ rows = 0 is x = 0
    k, n = len(rows), len(rows[0])
    M = [[rows[i][j] for i in range(k)] for j in range(n)]
    r = 0
    for c in range(k):
        piv = next((i for i in range(r, n) if M[i][c] != 0), None)
        if piv is None:
            return False
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, n):
            if M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [s - f * t for s, t in zip(M[i], M[r])]
        r += 1
    return True


def oracle_dual_points(cells: Sequence[Cone], box: BoxSpec) -> set[tuple[int, ...]]:
    """Box points ``l`` with ``<l, g> >= 0`` for every generator of every cell."""
    if not cells:
        raise ValueError("no cells given")
    gens = [g for D in cells for g in D.generators()]
    return {l for l in box.points()
            if all(sum(a * b for a, b in zip(l, g)) >= 0 for g in gens)}


def oracle_lattice_cone(L_basis: Sequence[Sequence[int]], C: Cone, box: BoxSpec):
    """Least nonzero box point of the lattice lying in ``C``.

    Points are ordered by max-norm, then lexicographically, so the first hit
    is a shortest witness.
    """
    if C.ambient_rank != box.dimension:
        raise DimensionMismatch("cone and box dimensions differ")
    for l in sorted(box.points(), key=lambda p: (max(map(abs, p)), p)):
        if any(l) and _in_cone(C, l) and in_lattice(L_basis, l):
            return l
    return None


def _in_cone(C: Cone, l) -> bool:
    return (all(sum(a * b for a, b in zip(e, l)) == 0 for e in C.equalities)
            and all(sum(a * b for a, b in zip(f, l)) >= 0 for f in C.ineqs))


def _angle_key(u):
    # exact counter-clockwise order starting at +x: half-plane, then slope via cross products
    return (0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1, u)


def _ccw_sorted(dirs):
    import functools

    def cmp(u, v):
        hu, hv = _angle_key(u)[0], _angle_key(v)[0]
        if hu != hv:
            return hu - hv
        cross = u[0] * v[1] - u[1] * v[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)
    return sorted(dirs, key=functools.cmp_to_key(cmp))


def _covered_2d(fan, m) -> bool:
    for c in fan.cones:
        rs = [fan.rays[i] for i in c]
        if len(rs) == 1:
            r = rs[0]
            if r[0] * m[1] - r[1] * m[0] == 0 and r[0] * m[0] + r[1] * m[1] > 0:
                return True
        elif len(rs) == 2:
            (a, b), (c_, d) = rs
            det = a * d - b * c_
            if det == 0:
                continue
            # m = s*u + t*v by Cramer's rule
            s = Fraction(m[0] * d - m[1] * c_, det)
            t = Fraction(a * m[1] - b * m[0], det)
            if s >= 0 and t >= 0:
                return True
        elif len(rs) > 2:
            raise ValueError("a pointed 2D cone has at most two extreme rays")
    return False


def oracle_ends_2d(fan) -> int:
    """Count maximal open arcs of directions outside ``|Σ|`` by an exact sweep.

    The directions of rays used by cones split the circle into open arcs;
    each arc is tested at one interior direction. Every such ray direction is
    itself covered, so each uncovered arc is its own end.
    """
    if fan.rank != 2:
        raise ValueError("angular sweep needs rank 2")
    dirs = _ccw_sorted({fan.rays[i] for c in fan.cones for i in c})
    if not dirs:
        return 1
    if len(dirs) == 1:
        u = dirs[0]
        return 0 if _covered_2d(fan, (-u[0], -u[1])) else 1
    ends = 0
    for i, u in enumerate(dirs):
        v = dirs[(i + 1) % len(dirs)]
        cross = u[0] * v[1] - u[1] * v[0]
        if cross > 0:
            m = (u[0] + v[0], u[1] + v[1])
        elif cross == 0:
            m = (-u[1], u[0])
        else:
            m = (-(u[0] + v[0]), -(u[1] + v[1]))
        if not _covered_2d(fan, m):
            ends += 1
    if ends == 0:
        raise ValueError("fan is complete")
    return ends


def oracle_problem_witness(problem, box: BoxSpec, cells=None):
    """Least box point of ``L ∩ C`` found from definitions alone.

    ``L`` membership is tested as "integer combination of ``L0`` and
    ``<l, q_j>`` integral"; ``C`` membership as nonnegativity on every
    generator of every complement cell. Neither goes through the congruence
    solver or the cone's H-rep.
    """
    from .fan import complement
    from .linalg import lattice_basis

    if cells is None:
        comp = complement(problem.fan)
        cells = [comp.complex.cells[i] for i in comp.cells]
    gens = sorted({g for D in cells for g in D.generators()})
    L0 = lattice_basis(problem.L0())
    for l in sorted(box.points(), key=lambda p: (max(map(abs, p)), p)):
        if not any(l):
            continue
        if not all(sum(a * b for a, b in zip(l, g)) >= 0 for g in gens):
            continue
        if not in_lattice(L0, l):
            continue
        if all(sum(Fraction(a) * q for a, q in zip(l, qs)).denominator == 1 for qs in problem.torsion):
            return l
    return None


def cross_check(problem, verdict, box: BoxSpec) -> list[str]:
    """Disagreements between a verdict and the brute-force baselines.

    One-sided: a box witness contradicts a Hartogs verdict; a missing box
    witness contradicts a non-Hartogs verdict only when the exact witness
    itself fits in the box.
    """
    issues = []
    found = oracle_problem_witness(problem, box)
    via_cone = oracle_lattice_cone(verdict.L.basis, verdict.C, box)
    for label, w in (("definition oracle", found), ("lattice-cone oracle", via_cone)):
        if verdict.hartogs and w is not None:
            issues.append(f"{label} found {w} but the verdict is Hartogs")
        if not verdict.hartogs and w is None and max(map(abs, verdict.witness)) <= box.radius:
            issues.append(f"{label} found nothing although witness {verdict.witness} fits the box")
    if problem.fan.rank == 2:
        k = oracle_ends_2d(problem.fan)
        if k != verdict.end_count:
            issues.append(f"angular sweep counts {k} ends, exact count {verdict.end_count}")
    return issues

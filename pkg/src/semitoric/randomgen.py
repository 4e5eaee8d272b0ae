"""Random instances: fans, unimodular matrices, semiabelian data."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import cmp_to_key

from .cone import cone_from_rays, intersect
from .fan import Fan, _is_face
from .linalg import dot, identity, primitive, rank


def angle_cmp(u, v) -> int:
    """Exact counter-clockwise angular order of nonzero 2D vectors from +x."""
    def half(w):
        return 0 if (w[1] > 0 or (w[1] == 0 and w[0] > 0)) else 1
    hu, hv = half(u), half(v)
    if hu != hv:
        return hu - hv
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def random_primitive(rng: random.Random, n: int, bound: int) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(n))
        if any(v):
            return primitive(v)


def random_fan_2d(rng: random.Random, max_rays: int = 6, bound: int = 4) -> Fan | None:
    """A random valid, non-complete fan in R^2, or ``None`` if the draw was complete."""
    k = rng.randint(0, max_rays)
    dirs = sorted({random_primitive(rng, 2, bound) for _ in range(k)}, key=cmp_to_key(angle_cmp))
    cones = []
    covered_arcs = 0
    for i, u in enumerate(dirs):
        if len(dirs) > 1:
            v = dirs[(i + 1) % len(dirs)]
            if u[0] * v[1] - u[1] * v[0] > 0 and rng.random() < 0.5:
                cones.append((i, (i + 1) % len(dirs)))
                covered_arcs += 1
                continue
        if rng.random() < 0.7:
            cones.append((i,))
    if len(dirs) >= 3 and covered_arcs == len(dirs):
        return None
    return Fan(2, tuple(dirs), tuple(cones))


def random_fan(rng: random.Random, n: int, max_rays: int = 8, bound: int = 3,
               attempts: int = 12) -> Fan:
    """A random valid fan in R^n grown greedily from simplicial cones."""
    pool = list({random_primitive(rng, n, bound) for _ in range(rng.randint(1, max_rays))})
    chosen: list[tuple[int, ...]] = []
    objs = []
    for _ in range(attempts):
        size = rng.randint(1, n)
        ids = tuple(sorted(rng.sample(range(len(pool)), min(size, len(pool)))))
        if ids in chosen:
            continue
        gens = [pool[i] for i in ids]
        if rank(gens) != len(gens):
            continue
        C = cone_from_rays(n, gens)
        ok = True
        for D in objs:
            F = intersect(C, D)
            if not (_is_face(F, C) and _is_face(F, D)):
                ok = False
                break
        if ok:
            chosen.append(ids)
            objs.append(C)
    used = sorted({i for c in chosen for i in c})
    remap = {old: new for new, old in enumerate(used)}
    return Fan(n, tuple(pool[i] for i in used),
               tuple(tuple(remap[i] for i in c) for c in chosen))


def random_unimodular(rng: random.Random, n: int, steps: int = 6, bound: int = 2) -> list[list[int]]:
    U = identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            if rng.random() < 0.3:
                U[i] = [-x for x in U[i]]
            continue
        f = rng.randint(-bound, bound)
        U[i] = [a + f * b for a, b in zip(U[i], U[j])]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        U[i], U[j] = U[j], U[i]
    return U


def integer_inverse(U: list[list[int]]) -> list[list[int]]:
    """Inverse of a unimodular matrix (exact, via fractions)."""
    n = len(U)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(U)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        p = A[c][c]
        A[c] = [x / p for x in A[c]]
        for i in range(n):
            if i != c and A[i][c]:
                f = A[i][c]
                A[i] = [s - f * t for s, t in zip(A[i], A[c])]
    inv = [[A[i][n + j] for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for row in inv for x in row), "matrix is not unimodular"
    return [[int(x) for x in row] for row in inv]


def random_sublattice_data(rng: random.Random, n: int):
    """Random ``(L0 generators, torsion)`` with small entries and denominators."""
    k = rng.randint(1, n)
    while True:
        L0 = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
        if rank(L0) > 0:
            break
    torsion = [tuple(Fraction(rng.randint(0, d - 1), d) for _ in range(n))
               for d in (rng.choice((2, 3, 4)) for _ in range(rng.randint(0, 2)))]
    return L0, torsion


def transform_covector(l, Uinv):
    """``l -> l @ U^{-1}``: keeps ``<l, r>`` when rays move by ``r -> U r``."""
    n = len(l)
    return tuple(sum(l[i] * Uinv[i][j] for i in range(n)) for j in range(n))


def transform_vector(v, U):
    return tuple(dot(row, v) for row in U)

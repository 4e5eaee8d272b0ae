"""Rational polyhedral cones in double description.

Every :class:`Cone` carries both representations, in canonical form:

* V-rep: primitive extreme rays (representatives orthogonal to the
  lineality space) and a saturated HNF basis of the lineality lattice;
* H-rep: primitive facet normals (orthogonal to the equality space) and a
  saturated HNF basis of the equality lattice ``span(C)^⊥ ∩ Z^n``.

Because both sides are canonical, two cones are equal as sets exactly when
they compare equal, and the dual cone is obtained by swapping the two sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    DimensionMismatch,
    dot,
    kernel_lattice,
    primitive,
    primitive_rational,
    project_orthogonal,
    rank,
    saturate,
)

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    ambient_rank: int
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    ineqs: tuple[Vec, ...]
    equalities: tuple[Vec, ...]

    def __repr__(self):
        return (f"Cone(n={self.ambient_rank}, rays={list(self.rays)}, "
                f"lineality={list(self.lineality)})")

    @property
    def dim(self) -> int:
        return self.ambient_rank - len(self.equalities)

    @property
    def is_pointed(self) -> bool:
        return not self.lineality

    def generators(self) -> list[Vec]:
        """Rays together with both signs of every lineality generator."""
        return list(self.rays) + list(self.lineality) + [tuple(-x for x in l) for l in self.lineality]

    def contains(self, v) -> bool:
        return contains(self, v)

    def is_trivial(self) -> bool:
        return is_trivial(self)


def _check_vectors(n: int, vecs: Iterable[Sequence[int]], what: str) -> list[Vec]:
    out = []
    for v in vecs:
        v = tuple(int(x) for x in v)
        if len(v) != n:
            raise DimensionMismatch(f"{what} {v} has length {len(v)}, expected {n}")
        out.append(v)
    return out


def _adjacent(p: Vec, q: Vec, pool: Sequence[Vec], target: int) -> bool:
    tight = [b for b in pool if dot(b, p) == 0 and dot(b, q) == 0]
    if len(tight) < target:
        return False
    return rank(tight) == target


def halfspace_step(n: int, rays: list[Vec], lin: list[Vec], a: Vec, pool: Sequence[Vec],
                   strict_equal: bool = False) -> tuple[list[Vec], list[Vec]]:
    """One double-description step: cut ``cone(rays) + span(lin)`` by ``<a, .> >= 0``.

    With ``strict_equal`` the cut is by ``<a, .> = 0`` instead. ``pool`` must
    hold covectors valid on the cone (each ``>= 0`` or ``= 0`` on it) that
    together cut it out; two rays are adjacent when the members of ``pool``
    tight at both have the rank of a 2-face.
    """
    k = next((i for i, l in enumerate(lin) if dot(a, l) != 0), None)
    if k is not None:
        lin = list(lin)
        l0 = lin.pop(k)
        s = dot(a, l0)
        if s < 0:
            l0 = tuple(-x for x in l0)
            s = -s
        lin = [primitive([s * x - dot(a, l) * y for x, y in zip(l, l0)]) for l in lin]
        rays = [primitive([s * x - dot(a, r) * y for x, y in zip(r, l0)]) for r in rays]
        if not strict_equal:
            rays.append(l0)
        return rays, lin
    vals = [dot(a, r) for r in rays]
    if all(v >= 0 for v in vals) and not (strict_equal and any(vals)):
        return list(rays), list(lin)
    pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
    neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
    if strict_equal:
        new = [r for r, v in zip(rays, vals) if v == 0]
    else:
        new = [r for r, v in zip(rays, vals) if v >= 0]
    # a 2-face modulo lineality has dimension len(lin) + 2
    target = n - len(lin) - 2
    for p, vp in pos:
        for q, vq in neg:
            if _adjacent(p, q, pool, target):
                new.append(primitive([vp * y - vq * x for x, y in zip(p, q)]))
    return new, list(lin)


def _double_description(n: int, ineqs: list[Vec], eqs: list[Vec]) -> tuple[list[Vec], list[Vec]]:
    """Generators of ``{x : <a, x> >= 0 for a in ineqs, <e, x> = 0 for e in eqs}``.

    Incremental: starts from the subspace cut out by ``eqs`` (all lineality)
    and inserts inequalities in input order. An inequality that is nonzero on
    the current lineality consumes one lineality direction; otherwise the
    classic ray split runs, with adjacency decided by the rank of the
    constraints tight at both rays.
    """
    eqs = [e for e in eqs if any(e)]
    lin = [tuple(l) for l in kernel_lattice(eqs, n)]
    rays: list[Vec] = []
    pool: list[Vec] = list(eqs)
    for a in ineqs:
        a = primitive(a)
        if not any(a):
            continue
        rays, lin = halfspace_step(n, rays, lin, a, pool)
        pool.append(a)
    return rays, lin


def canonical_generators(n: int, rays: Sequence[Vec], lin: Sequence[Vec]) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Saturated HNF lineality basis; rays projected off it, primitive, sorted."""
    lin_basis = [tuple(r) for r in saturate(lin, n)] if lin else []
    out = set()
    for r in rays:
        if lin_basis:
            r = primitive_rational(project_orthogonal(r, lin_basis))
        else:
            r = primitive(r)
        if any(r):
            out.add(r)
    return tuple(sorted(out)), tuple(lin_basis)


def _build_from_h(n: int, ineqs: list[Vec], eqs: list[Vec]) -> Cone:
    rays, lin = canonical_generators(n, *_double_description(n, ineqs, eqs))
    facets, equalities = canonical_generators(n, *_double_description(n, list(rays), list(lin)))
    return Cone(n, rays, lin, facets, equalities)


def _build_from_v(n: int, gens: list[Vec], lin: list[Vec]) -> Cone:
    facets, equalities = canonical_generators(n, *_double_description(n, gens, lin))
    rays, lineality = canonical_generators(n, *_double_description(n, list(facets), list(equalities)))
    return Cone(n, rays, lineality, facets, equalities)


def cone_from_rays(n: int, gens: Iterable[Sequence[int]], lineality: Iterable[Sequence[int]] = ()) -> Cone:
    """The cone of nonnegative combinations of ``gens`` plus ``span(lineality)``.

    Zero generators are dropped and redundant ones are discarded; the result
    keeps only extreme rays.
    """
    if n < 1:
        raise ValueError("ambient rank must be positive")
    gens = [g for g in _check_vectors(n, gens, "generator") if any(g)]
    lin = [g for g in _check_vectors(n, lineality, "lineality generator") if any(g)]
    return _build_from_v(n, gens, lin)


def cone_from_ineqs(n: int, covs: Iterable[Sequence[int]], equalities: Iterable[Sequence[int]] = ()) -> Cone:
    """The cone ``{v : <a, v> >= 0 for a in covs, <e, v> = 0 for e in equalities}``."""
    if n < 1:
        raise ValueError("ambient rank must be positive")
    covs = _check_vectors(n, covs, "covector")
    eqs = _check_vectors(n, equalities, "equality")
    return _build_from_h(n, covs, eqs)


def zero_cone(n: int) -> Cone:
    return cone_from_rays(n, [])


def full_space(n: int) -> Cone:
    return cone_from_ineqs(n, [])


def dual(C: Cone) -> Cone:
    """``C^∨ = {l : <l, v> >= 0 for all v in C}``, recomputed by double description."""
    if C.ambient_rank == 0:
        return C
    return _build_from_h(C.ambient_rank, list(C.rays), list(C.lineality))


def intersect(C1: Cone, C2: Cone) -> Cone:
    if C1.ambient_rank != C2.ambient_rank:
        raise DimensionMismatch("cones live in different ambient spaces")
    return _build_from_h(C1.ambient_rank,
                         list(C1.ineqs) + list(C2.ineqs),
                         list(C1.equalities) + list(C2.equalities))


def contains(C: Cone, v: Sequence) -> bool:
    if len(v) != C.ambient_rank:
        raise DimensionMismatch(f"vector of length {len(v)} against cone of rank {C.ambient_rank}")
    if not all(type(x) is int for x in v):
        v = [Fraction(x) for x in v]
    return (all(dot(e, v) == 0 for e in C.equalities)
            and all(dot(a, v) >= 0 for a in C.ineqs))


def contains_cone(C1: Cone, C2: Cone) -> bool:
    """Whether ``C2 ⊆ C1``, tested on the generators of ``C2``."""
    return all(contains(C1, g) for g in C2.generators())


def is_trivial(C: Cone) -> bool:
    return not C.rays and not C.lineality


def restrict_to_subspace(C: Cone, B: Sequence[Sequence[int]]) -> Cone:
    """Pull ``C`` back along ``t -> t @ B``: the cone ``{t : t @ B in C}``.

    The rows of ``B`` are coordinates of a sublattice; the result lives in
    ``R^len(B)`` and its H-rep is ``C``'s H-rep composed with ``B``.
    """
    B = [tuple(int(x) for x in row) for row in B]
    for row in B:
        if len(row) != C.ambient_rank:
            raise DimensionMismatch("basis rows do not match the cone's ambient rank")
    k = len(B)
    if k == 0:
        return Cone(0, (), (), (), ())
    ineqs = [tuple(dot(row, a) for row in B) for a in C.ineqs]
    eqs = [tuple(dot(row, e) for row in B) for e in C.equalities]
    return _build_from_h(k, ineqs, eqs)

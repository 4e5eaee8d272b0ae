"""Fans, their support, and the region outside the support.

The complement ``R^n \\ |Σ|`` is handled exactly by decomposing ``R^n`` into
the cells of the central hyperplane arrangement formed by every facet and
equality hyperplane of every cone of ``Σ``. Each cone of ``Σ`` is a union of
closed cells, so each cell lies either inside ``|Σ|`` or entirely outside it.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .cone import (
    Cone,
    canonical_generators,
    cone_from_ineqs,
    cone_from_rays,
    contains,
    halfspace_step,
    intersect,
    zero_cone,
)
from .linalg import DimensionMismatch, dot, identity, lattice_basis, primitive, rank, saturate

Vec = tuple[int, ...]


class CompleteFan(Exception):
    """The fan's support is all of ``R^n``; its complement is empty."""


class NonPointedWarning(UserWarning):
    """The support does not span, so C contains a line."""


@dataclass(frozen=True)
class Fan:
    """A fan given by primitive rays and cones as index sets into ``rays``.

    The zero cone is always implicitly a member.
    """

    rank: int
    rays: tuple[Vec, ...]
    cones: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("fan rank must be positive")
        rays = tuple(tuple(int(x) for x in r) for r in self.rays)
        for r in rays:
            if len(r) != self.rank:
                raise DimensionMismatch(f"ray {r} does not have length {self.rank}")
            if not any(r):
                raise ValueError("zero vector given as a ray")
        cones = tuple(tuple(sorted(set(int(i) for i in c))) for c in self.cones)
        for c in cones:
            for i in c:
                if not 0 <= i < len(rays):
                    raise ValueError(f"cone {c} refers to missing ray {i}")
        object.__setattr__(self, "rays", tuple(primitive(r) for r in rays))
        object.__setattr__(self, "cones", cones)

    @classmethod
    def from_cones(cls, rank: int, cones: Sequence[Sequence[Sequence[int]]]) -> "Fan":
        """Build a fan from cones listed by their ray vectors."""
        rays: list[Vec] = []
        index = {}
        idx_cones = []
        for c in cones:
            ids = []
            for r in c:
                r = primitive(tuple(r))
                if r not in index:
                    index[r] = len(rays)
                    rays.append(r)
                ids.append(index[r])
            idx_cones.append(ids)
        return cls(rank, tuple(rays), tuple(tuple(c) for c in idx_cones))

    @cached_property
    def cone_objects(self) -> tuple[Cone, ...]:
        return tuple(cone_from_rays(self.rank, [self.rays[i] for i in c]) for c in self.cones)

    def transform(self, U: Sequence[Sequence[int]]) -> "Fan":
        """Image under the linear map ``r -> U r``."""
        rays = tuple(tuple(dot(row, r) for row in U) for r in self.rays)
        return Fan(self.rank, rays, self.cones)

    def is_smooth(self) -> bool:
        """Informational: every cone's rays extend to a basis of ``Z^n``."""
        for c, C in zip(self.cones, self.cone_objects):
            rs = [list(self.rays[i]) for i in c]
            if not rs:
                continue
            if len(C.rays) != len(rs) or len(lattice_basis(rs)) != len(rs):
                return False
            if lattice_basis(rs) != saturate(rs, self.rank):
                return False
        return True


def _is_face(F: Cone, C: Cone) -> bool:
    """Whether the subcone ``F ⊆ C`` is a face of ``C``."""
    gens = F.generators()
    tight = [a for a in C.ineqs if all(dot(a, g) == 0 for g in gens)]
    face = cone_from_ineqs(C.ambient_rank, C.ineqs, list(C.equalities) + tight)
    return face == F


def validate_fan(fan: Fan, strict: bool = True) -> list[str]:
    """Return a list of violations; empty means valid.

    Always checks strict convexity. With ``strict``, also checks that every
    pairwise intersection is a face of both cones.
    """
    problems = []
    objs = fan.cone_objects
    for c, C in zip(fan.cones, objs):
        if not C.is_pointed:
            problems.append(f"cone {list(c)} is not strictly convex")
    if strict:
        for (i, C1), (j, C2) in itertools.combinations(enumerate(objs), 2):
            if not (C1.is_pointed and C2.is_pointed):
                continue
            F = intersect(C1, C2)
            if not (_is_face(F, C1) and _is_face(F, C2)):
                problems.append(f"cones {list(fan.cones[i])} and {list(fan.cones[j])} "
                                f"meet outside a common face")
    return problems


def support_contains(fan: Fan, v: Sequence) -> bool:
    if len(v) != fan.rank:
        raise DimensionMismatch(f"vector of length {len(v)} against fan of rank {fan.rank}")
    if not any(v):
        return True
    return any(contains(C, v) for C in fan.cone_objects)


@dataclass(frozen=True)
class Cell:
    """A relatively open cell: sign vector, interior point, closure generators."""

    signs: tuple[int, ...]
    point: Vec
    rays: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    dim: int

    def generators(self) -> list[Vec]:
        return list(self.rays) + list(self.lineality) + [tuple(-x for x in l) for l in self.lineality]

    @cached_property
    def closure(self) -> Cone:
        return cone_from_rays(len(self.point), self.rays, self.lineality)


@dataclass(frozen=True)
class CellComplex:
    """Cells of a central arrangement, sorted by sign vector.

    ``adjacency`` holds pairs ``(chamber, face)`` of cell indices where the
    face cell lies in the closure of the full-dimensional chamber.
    """

    rank: int
    hyperplanes: tuple[Vec, ...]
    cells: tuple[Cell, ...]
    adjacency: tuple[tuple[int, int], ...] = field(repr=False)

    def chambers(self) -> list[int]:
        return [i for i, c in enumerate(self.cells) if c.dim == self.rank]


def _sides(rays, lin, a: Vec) -> list[int]:
    """Signs of ``<a, .>`` realized on the relative interior of a cell."""
    if any(dot(a, l) for l in lin):
        return [-1, 0, 1]
    vals = [dot(a, r) for r in rays]
    pos = any(v > 0 for v in vals)
    neg = any(v < 0 for v in vals)
    out = []
    if neg:
        out.append(-1)
    if (pos and neg) or not (pos or neg):
        out.append(0)
    if pos:
        out.append(1)
    return out


def _canonical_hyperplane(a: Sequence[int]) -> Vec:
    a = primitive(tuple(a))
    lead = next(x for x in a if x)
    return a if lead > 0 else tuple(-x for x in a)


def arrangement(n: int, hyperplanes: Sequence[Sequence[int]]) -> CellComplex:
    """Cell decomposition of ``R^n`` by central hyperplanes.

    Hyperplanes are inserted one at a time; each existing cell they cross is
    split by a single double-description step on its closure's generators.
    """
    hs: list[Vec] = []
    for a in hyperplanes:
        if len(a) != n:
            raise DimensionMismatch("hyperplane of wrong length")
        if any(a):
            a = _canonical_hyperplane(a)
            if a not in hs:
                hs.append(a)
    hs.sort()
    whole = [tuple(r) for r in identity(n)]
    cells: list[tuple[tuple[int, ...], list[Vec], list[Vec]]] = [((), [], whole)]
    for k, a in enumerate(hs):
        pool = hs[:k]
        nxt = []
        for signs, rays, lin in cells:
            sides = _sides(rays, lin, a)
            if len(sides) == 1:
                nxt.append((signs + (sides[0],), rays, lin))
                continue
            for s in sides:
                cut = a if s >= 0 else tuple(-x for x in a)
                r2, l2 = halfspace_step(n, rays, lin, cut, pool, strict_equal=(s == 0))
                nxt.append((signs + (s,), r2, l2))
        cells = nxt
    cells.sort(key=lambda c: c[0])
    out = []
    for signs, rays, lin in cells:
        rays, lin = canonical_generators(n, rays, lin)
        p = tuple(sum(r[j] for r in rays) for j in range(n))  # relative interior
        assert tuple((dot(a, p) > 0) - (dot(a, p) < 0) for a in hs) == signs
        dim = n - rank([a for a, s in zip(hs, signs) if s == 0])
        out.append(Cell(signs, p, rays, lin, dim))
    return CellComplex(n, tuple(hs), tuple(out), _incidence(out, n))


def _incidence(cells: list[Cell], n: int) -> tuple[tuple[int, int], ...]:
    chambers = {c.signs: i for i, c in enumerate(cells) if c.dim == n}
    pairs = []
    for g, cell in enumerate(cells):
        if cell.dim == n:
            continue
        zeros = [k for k, s in enumerate(cell.signs) if s == 0]
        if 2 ** len(zeros) <= len(chambers):
            for fill in itertools.product((-1, 1), repeat=len(zeros)):
                s = list(cell.signs)
                for k, x in zip(zeros, fill):
                    s[k] = x
                f = chambers.get(tuple(s))
                if f is not None:
                    pairs.append((f, g))
        else:
            for s, f in chambers.items():
                if all(x == 0 or x == y for x, y in zip(cell.signs, s)):
                    pairs.append((f, g))
    return tuple(sorted(pairs))


def fan_hyperplanes(fan: Fan) -> list[Vec]:
    hs = []
    for C in fan.cone_objects:
        if not C.rays:
            continue
        hs.extend(C.ineqs)
        hs.extend(C.equalities)
    if not hs:
        # Σ = {0}: the zero cone's own equalities isolate the origin
        hs.extend(zero_cone(fan.rank).equalities)
    return hs


def build_arrangement(fan: Fan) -> CellComplex:
    return arrangement(fan.rank, fan_hyperplanes(fan))


@dataclass(frozen=True)
class Complement:
    """The cells of an arrangement lying outside ``|Σ|``, with components."""

    complex: CellComplex
    cells: tuple[int, ...]
    labels: dict[int, int]

    @property
    def count(self) -> int:
        return len(set(self.labels.values()))

    def components(self) -> list[list[int]]:
        groups: dict[int, list[int]] = {}
        for c, lab in self.labels.items():
            groups.setdefault(lab, []).append(c)
        return [sorted(groups[k]) for k in sorted(groups)]


def _union_find_labels(nodes: Sequence[int], edges) -> dict[int, int]:
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        if a in parent and b in parent:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots = sorted({find(v) for v in nodes})
    rename = {r: i for i, r in enumerate(roots)}
    return {v: rename[find(v)] for v in nodes}


def complement(fan: Fan, cx: CellComplex | None = None) -> Complement:
    cx = cx or build_arrangement(fan)
    outside = tuple(i for i, c in enumerate(cx.cells) if not support_contains(fan, c.point))
    return Complement(cx, outside, _union_find_labels(outside, cx.adjacency))


def complement_cells(fan: Fan) -> list[Cone]:
    """Closures of the arrangement cells outside ``|Σ|``.

    Their union is the closure of ``R^n \\ |Σ|``; the list is empty exactly
    when the fan is complete.
    """
    comp = complement(fan)
    return [comp.complex.cells[i].closure for i in comp.cells]


@dataclass(frozen=True)
class Ends:
    count: int
    labels: dict[int, int]
    component_sizes: tuple[int, ...]
    complement: Complement = field(repr=False)


def count_ends(fan: Fan) -> Ends:
    """Connected components of the open complement ``R^n \\ |Σ|``.

    ``labels`` maps each complement cell (index into the arrangement) to its
    component number.
    """
    comp = complement(fan)
    if not comp.cells:
        raise CompleteFan("the fan is complete; its complement is empty")
    sizes = tuple(len(c) for c in comp.components())
    return Ends(comp.count, comp.labels, sizes, comp)


def dual_of_union(n: int, cells: Sequence[Cone | Cell]) -> Cone:
    """``(∪ cells)^∨``, the intersection of the duals, as one H-rep."""
    ineqs, eqs = set(), set()
    for D in cells:
        ineqs.update(D.rays)
        eqs.update(D.lineality)
    return cone_from_ineqs(n, sorted(ineqs), sorted(eqs))


def _closure_cover(comp: Complement, cells: Sequence[int]) -> list[Cell]:
    # the chambers' closures already cover the closure of an open union of cells
    cx = comp.complex
    chambers = [cx.cells[i] for i in cells if cx.cells[i].dim == cx.rank]
    return chambers or [cx.cells[i] for i in cells]


def complement_closure_dual(fan: Fan, comp: Complement | None = None) -> Cone:
    """``C = (closure(R^n \\ |Σ|))^∨``.

    Warns with :class:`NonPointedWarning` when C is not strictly convex,
    which happens when ``|Σ|`` does not span ``R^n``.
    """
    comp = comp or complement(fan)
    if not comp.cells:
        raise CompleteFan("the fan is complete; its complement is empty")
    C = dual_of_union(fan.rank, _closure_cover(comp, comp.cells))
    if not C.is_pointed:
        warnings.warn(f"C has lineality of rank {len(C.lineality)}; |Σ| does not span",
                      NonPointedWarning, stacklevel=2)
    return C

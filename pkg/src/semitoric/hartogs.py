"""Deciding the Hartogs phenomenon from lattice and fan data.

For an almost homogeneous G-manifold ``X = G x^T Y`` over a semiabelian
``G``, with ``Y`` the toric variety of a fan ``Σ`` whose complement has one
end, the structure sheaf of ``X`` is Hartogs exactly when ``L ∩ C = 0``:

* ``L`` is the weight lattice of ``C[G]``, the characters of ``L0`` that are
  trivial on the torsion points ``ξ_j = exp(2πi q_j)``;
* ``C`` is the dual cone of the closure of ``R^n \\ |Σ|``.

Both are rational, so ``L ∩ C = 0`` iff ``C ∩ span_R(L) = 0``: a rational
point of the intersection, scaled by its denominators, is a lattice point.
That turns the integer question into triviality of the pull-back cone
``{t : t @ basis(L) in C}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Sequence

from .cone import Cone, contains, is_trivial, restrict_to_subspace
from .fan import (
    Complement,
    CompleteFan,
    Fan,
    _closure_cover,
    complement,
    complement_closure_dual,
    dual_of_union,
)
from .linalg import (
    DimensionMismatch,
    as_ratvec,
    congruence_sublattice,
    identity,
    lattice_basis,
    primitive,
    solve_lattice,
    vecmat,
)


class MultipleEnds(Exception):
    """The open complement of the fan has more than one component."""

    def __init__(self, count: int):
        super().__init__(f"complement of |Σ| has {count} connected components; "
                         f"the criterion needs exactly one (see per_end_diagnostic)")
        self.count = count


class CertificateError(AssertionError):
    pass


@dataclass(frozen=True)
class Sublattice:
    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, n: int, gens: Sequence[Sequence[int]]) -> "Sublattice":
        return cls(n, tuple(tuple(r) for r in lattice_basis([list(g) for g in gens])))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v) -> list[int] | None:
        return solve_lattice(self.basis, v)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None


@dataclass(frozen=True)
class SemiabelianProblem:
    """Combinatorial data of ``X = G x^T Y``.

    ``L0_generators`` are characters ``l_i`` (rows) cutting out
    ``(G_ant)_aff``; ``None`` means all of ``Z^n``. ``torsion`` holds vectors
    ``q_j`` with ``ξ_j = exp(2πi q_j)``, reduced into ``[0, 1)``.
    """

    torus_rank: int
    L0_generators: tuple[tuple[int, ...], ...] | None
    torsion: tuple[tuple[Fraction, ...], ...]
    fan: Fan

    def __post_init__(self):
        n = self.torus_rank
        if self.fan.rank != n:
            raise DimensionMismatch(f"fan of rank {self.fan.rank} over a torus of rank {n}")
        if self.L0_generators is not None:
            gens = tuple(tuple(int(x) for x in g) for g in self.L0_generators)
            if any(len(g) != n for g in gens):
                raise DimensionMismatch("L0 generator of wrong length")
            object.__setattr__(self, "L0_generators", gens)
        tors = []
        for q in self.torsion:
            q = as_ratvec(q)
            if len(q) != n:
                raise DimensionMismatch("torsion vector of wrong length")
            tors.append(tuple(x - floor(x) for x in q))
        object.__setattr__(self, "torsion", tuple(tors))

    def L0(self) -> list[list[int]]:
        if self.L0_generators is None:
            return identity(self.torus_rank)
        return [list(g) for g in self.L0_generators]


def character_lattice(p: SemiabelianProblem) -> Sublattice:
    """``L = {l in L0 : <l, q_j> in Z for all j}``, in HNF."""
    gens = p.L0()
    if not any(any(g) for g in gens):
        return Sublattice(p.torus_rank, ())
    basis = congruence_sublattice(gens, p.torsion)
    return Sublattice(p.torus_rank, tuple(tuple(r) for r in basis))


@dataclass(frozen=True)
class EndDiagnostic:
    component: int
    cells: tuple[int, ...]
    cone: Cone

    @property
    def candidate(self) -> bool:
        """``C_i = 0``: the sufficient-condition candidate for this end."""
        return is_trivial(self.cone)


@dataclass(frozen=True)
class Verdict:
    hartogs: bool
    witness: tuple[int, ...] | None
    C: Cone
    L: Sublattice
    restricted: Cone
    end_count: int
    per_end: tuple[EndDiagnostic, ...] = field(default=())

    @property
    def C_generators(self):
        return self.C.generators()

    @property
    def L_basis(self):
        return self.L.basis


def verify_witness(w: Sequence[int], L: Sublattice, C: Cone) -> bool:
    """The certificate contract: ``w != 0``, ``w in L`` exactly, ``w in C``."""
    return any(w) and w in L and contains(C, w)


def check_verdict(v: Verdict) -> None:
    """Raise :class:`CertificateError` unless the verdict's certificate holds."""
    if v.hartogs:
        if v.witness is not None or not is_trivial(v.restricted):
            raise CertificateError("Hartogs verdict with a nontrivial restricted cone")
    elif v.witness is None or not verify_witness(v.witness, v.L, v.C):
        raise CertificateError(f"witness {v.witness} fails the certificate checks")


def _ends_diagnostic(fan: Fan, comp: Complement) -> tuple[EndDiagnostic, ...]:
    return tuple(EndDiagnostic(k, tuple(group), dual_of_union(fan.rank, _closure_cover(comp, group)))
                 for k, group in enumerate(comp.components()))


def per_end_diagnostic(fan: Fan) -> list[EndDiagnostic]:
    """For each component ``U_i`` of the open complement, ``C_i = (closure U_i)^∨``.

    Diagnostic data only: ``some C_i = 0`` is reported as a candidate
    sufficient condition and never used as a verdict.
    """
    comp = complement(fan)
    if not comp.cells:
        raise CompleteFan("the fan is complete; its complement is empty")
    return list(_ends_diagnostic(fan, comp))


def decide(p: SemiabelianProblem) -> Verdict:
    """Whether the structure sheaf of ``G x^T Y`` is Hartogs.

    Raises :class:`CompleteFan` or :class:`MultipleEnds` when the fan is
    outside the criterion's hypotheses. Every returned verdict has passed
    :func:`check_verdict`.
    """
    fan = p.fan
    comp = complement(fan)
    if not comp.cells:
        raise CompleteFan("the fan is complete; its complement is empty")
    if comp.count != 1:
        raise MultipleEnds(comp.count)
    C = complement_closure_dual(fan, comp)
    L = character_lattice(p)
    restricted = restrict_to_subspace(C, L.basis)
    per_end = _ends_diagnostic(fan, comp)
    if is_trivial(restricted):
        verdict = Verdict(True, None, C, L, restricted, 1, per_end)
    else:
        # rays come sorted and primitive in L coordinates; first one is the lex-least
        t = restricted.rays[0] if restricted.rays else restricted.lineality[0]
        w = vecmat(primitive(t), L.basis, p.torus_rank)
        verdict = Verdict(False, w, C, L, restricted, 1, per_end)
    check_verdict(verdict)
    return verdict


def decide_toric(fan: Fan) -> Verdict:
    """The pure toric case ``G = T``: ``L = Z^n``, Hartogs iff ``C = 0``."""
    return decide(SemiabelianProblem(fan.rank, None, (), fan))

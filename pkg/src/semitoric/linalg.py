"""Exact integer and rational linear algebra.

Matrices are plain lists of rows of Python ints (unbounded). Rational
vectors are tuples of :class:`fractions.Fraction`. Nothing here touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
RatVector = tuple[Fraction, ...]


class DimensionMismatch(ValueError):
    pass


def as_ratvec(v: Iterable) -> RatVector:
    """Coerce ints, Fractions or ``"p/q"`` strings into a rational vector."""
    return tuple(Fraction(x) for x in v)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def vec_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def primitive_rational(v: Sequence) -> tuple[int, ...]:
    """The primitive integer vector on the ray through a rational vector."""
    v = [Fraction(x) for x in v]
    d = 1
    for x in v:
        d = lcm(d, x.denominator)
    return primitive([int(x * d) for x in v])


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> IntMatrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[dot(row, col) for col in Bt] for row in A]


def vecmat(v: Sequence, M: Sequence[Sequence], ncols: int) -> tuple:
    """Row vector times matrix: ``sum_i v[i] * M[i]``."""
    out = [0] * ncols
    for c, row in zip(v, M):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return tuple(out)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M`` and ``U`` unimodular. ``H`` is in
    echelon form with positive pivots, entries above each pivot reduced into
    ``[0, pivot)``, and zero rows at the bottom.
    """
    if not M:
        raise ValueError("hnf of an empty matrix")
    m, n = len(M), len(M[0])
    A = [list(map(int, row)) for row in M]
    if any(len(row) != n for row in A):
        raise DimensionMismatch("ragged matrix")
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = _xgcd(a, b)
            p, q = -b // g, a // g
            Ar, Ai = A[r], A[i]
            A[r] = [x * s + y * t for s, t in zip(Ar, Ai)]
            A[i] = [p * s + q * t for s, t in zip(Ar, Ai)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * s + y * t for s, t in zip(Ur, Ui)]
            U[i] = [p * s + q * t for s, t in zip(Ur, Ui)]
        piv = A[r][c]
        if piv == 0:
            continue
        if piv < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
            piv = -piv
        for i in range(r):
            f = A[i][c] // piv
            if f:
                A[i] = [s - f * t for s, t in zip(A[i], A[r])]
                U[i] = [s - f * t for s, t in zip(U[i], U[r])]
        r += 1
    return A, U


def lattice_basis(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical (HNF, zero rows dropped) basis of the lattice spanned by rows."""
    if not rows:
        return []
    H, _ = hnf(rows)
    return [row for row in H if any(row)]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by fraction Gaussian elimination."""
    A = [[Fraction(x) for x in row] for row in rows if any(row)]
    if not A:
        return 0
    n = len(A[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, len(A)):
            f = A[i][c]
            if f:
                f /= p
                A[i] = [s - f * t for s, t in zip(A[i], A[r])]
        r += 1
        if r == len(A):
            break
    return r


def kernel_lattice(M: Sequence[Sequence[int]], n: int | None = None) -> IntMatrix:
    """HNF basis of ``{v in Z^n : M v = 0}``.

    The basis is taken from the transformation matrix of an HNF of ``M^T``,
    so the returned lattice is saturated. ``n`` is required when ``M`` has no
    rows.
    """
    if n is None:
        if not M:
            raise ValueError("number of columns is required for an empty matrix")
        n = len(M[0])
    if n == 0:
        return []
    if not M or not any(any(row) for row in M):
        return identity(n)
    if any(len(row) != n for row in M):
        raise DimensionMismatch("ragged matrix")
    H, U = hnf(transpose(M))
    r = sum(1 for row in H if any(row))
    return lattice_basis(U[r:])


def saturate(rows: Sequence[Sequence[int]], n: int) -> IntMatrix:
    """Basis of ``span_R(rows) ∩ Z^n``."""
    return kernel_lattice(kernel_lattice(rows, n), n)


def solve_lattice(basis: Sequence[Sequence[int]], v: Sequence) -> list[int] | None:
    """Integer coefficients ``c`` with ``sum c_i basis_i == v``, or ``None``.

    ``basis`` may be linearly dependent; one solution is returned.
    """
    if not basis:
        return [] if not any(v) else None
    n = len(basis[0])
    if len(v) != n:
        raise DimensionMismatch(f"vector of length {len(v)} against rank {n}")
    v = [Fraction(x) for x in v]
    if any(x.denominator != 1 for x in v):
        return None
    rem = [int(x) for x in v]
    H, U = hnf(basis)
    coef = [0] * len(H)
    for i, row in enumerate(H):
        c = next((j for j, x in enumerate(row) if x), None)
        if c is None:
            break
        q, r = divmod(rem[c], row[c])
        if r:
            return None
        if q:
            coef[i] = q
            rem = [s - q * t for s, t in zip(rem, row)]
    if any(rem):
        return None
    return [int(x) for x in vecmat(coef, U, len(basis))]


def project_orthogonal(v: Sequence, basis: Sequence[Sequence[int]]) -> RatVector:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``."""
    v = [Fraction(x) for x in v]
    if not basis:
        return tuple(v)
    k = len(basis)
    # solve Gram * c = basis @ v
    G = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] + [dot(basis[i], v)]
         for i in range(k)]
    for c in range(k):
        piv = next(i for i in range(c, k) if G[i][c] != 0)
        G[c], G[piv] = G[piv], G[c]
        p = G[c][c]
        G[c] = [x / p for x in G[c]]
        for i in range(k):
            if i != c and G[i][c]:
                f = G[i][c]
                G[i] = [s - f * t for s, t in zip(G[i], G[c])]
    coef = [G[i][k] for i in range(k)]
    return tuple(x - sum(c * b[j] for c, b in zip(coef, basis)) for j, x in enumerate(v))


def congruence_sublattice(B: Sequence[Sequence[int]],
                          constraints: Sequence[Sequence]) -> IntMatrix:
    """HNF basis of ``{l in row-span_Z(B) : <l, q> in Z for every q}``.

    Solved as one integer kernel: for ``l = t B`` the conditions read
    ``t A ≡ 0 (mod d)`` with ``d`` the common denominator and ``A`` the
    integer matrix ``d * B q``; the kernel of ``[A^T | d I]`` projected onto
    the ``t`` coordinates gives every admissible ``t``.
    """
    if not B:
        return []
    n = len(B[0])
    qs = [as_ratvec(q) for q in constraints]
    for q in qs:
        if len(q) != n:
            raise DimensionMismatch(f"torsion vector of length {len(q)} against rank {n}")
    qs = [q for q in qs if any(x.denominator != 1 for x in q)]
    if not qs:
        return lattice_basis(B)
    d = 1
    for q in qs:
        for x in q:
            d = lcm(d, x.denominator)
    k, m = len(B), len(qs)
    A = [[int(dot(row, q) * d) for q in qs] for row in B]  # k x m
    system = [[A[i][j] for i in range(k)] + [d * int(jj == j) for jj in range(m)]
              for j in range(m)]
    ker = kernel_lattice(system, k + m)
    gens = [vecmat(row[:k], B, n) for row in ker]
    return lattice_basis([list(g) for g in gens])

"""Alexander polynomial, Levine-Tristram signatures and the Arf invariant of a Seifert matrix."""

from __future__ import annotations

from functools import lru_cache

from flint import fmpq_poly

from ..exactnum import CyclotomicElement, LaurentPoly, Ring, UnitCirclePoint, ZZ, hermitian_signature
from .matrix import SeifertMatrix


def poly_det(M: list[list[fmpq_poly]]) -> fmpq_poly:
    """Fraction-free (Bareiss) determinant of a matrix over Q[t]."""
    n = len(M)
    if n == 0:
        return fmpq_poly([1])
    M = [list(r) for r in M]
    sign, prev = 1, fmpq_poly([1])
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if not M[i][k].is_zero()), None)
        if piv is None:
            return fmpq_poly([])
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q, r = divmod(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev)
                assert r.is_zero()
                M[i][j] = q
        prev = M[k][k]
    return M[n - 1][n - 1] * sign


@lru_cache(maxsize=None)
def _alexander_z(entries: tuple) -> LaurentPoly:
    n = len(entries)
    M = [[fmpq_poly([-entries[j][i], entries[i][j]]) for j in range(n)] for i in range(n)]
    d = poly_det(M)
    return LaurentPoly(ZZ, [int(c) for c in d.coeffs()]).normalized()


def alexander_poly(A: SeifertMatrix, ring: Ring = ZZ) -> LaurentPoly:
    """``det(tA - A^T)``, Alexander-normalized, with coefficients in ``ring``."""
    delta = _alexander_z(A.entries)
    return delta if ring == ZZ else delta.change_ring(ring).normalized()


def levine_tristram_matrix(A: SeifertMatrix, w: UnitCirclePoint):
    """The hermitian matrix ``(1 - w) A + (1 - conj w) A^T`` over Q(zeta_q)."""
    z = CyclotomicElement.at_point(w)
    u = 1 - z
    ub = u.conj()
    E = A.entries
    n = A.size
    return [[u * E[i][j] + ub * E[j][i] for j in range(n)] for i in range(n)]


@lru_cache(maxsize=65536)
def _lt(entries: tuple, w: UnitCirclePoint) -> int:
    if w.is_one() or not entries:
        return 0
    return hermitian_signature(levine_tristram_matrix(SeifertMatrix(entries), w))


def levine_tristram(A: SeifertMatrix, w: UnitCirclePoint) -> int:
    """Exact Levine-Tristram signature at ``w`` (0 at ``w = 1``, where the form vanishes)."""
    return _lt(A.entries, w)


def det_at_minus_one(A: SeifertMatrix) -> int:
    return alexander_poly(A)(-1)


def arf(A: SeifertMatrix) -> int:
    """Arf invariant in Z/2: zero exactly when ``Delta(-1)`` is congruent to +-1 mod 8."""
    return arf_from_delta(alexander_poly(A))


def arf_from_delta(delta: LaurentPoly) -> int:
    return 0 if delta(-1) % 8 in (1, 7) else 1

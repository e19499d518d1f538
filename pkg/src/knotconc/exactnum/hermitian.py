"""Exact signatures of hermitian matrices over cyclotomic fields.

The characteristic polynomial is computed by Hessenberg reduction over the
field; its coefficients lie in the real subfield, and because every root of
a hermitian matrix's characteristic polynomial is real, Descartes' rule of
signs counts positive and negative eigenvalues exactly.
"""

from __future__ import annotations

from math import lcm

from flint import fmpq_poly

from ..errors import NonHermitianInput
from .cyclotomic import CyclotomicElement, certified_sign, conj_poly, cyclotomic_modulus


def _common_conductor(M) -> int:
    q = 1
    for row in M:
        for x in row:
            q = lcm(q, x.conductor)
    return q


def charpoly(M, q: int | None = None) -> list[CyclotomicElement]:
    """Coefficients ``c_0 .. c_n`` (constant first, monic) of ``det(x I - M)``."""
    n = len(M)
    if q is None:
        q = _common_conductor(M) if n else 1
    phi = cyclotomic_modulus(q)
    H = [[x.lift(q)._poly for x in row] for row in M]
    zero = fmpq_poly([])

    # Hessenberg form by elementary similarity transforms
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if not H[i][m - 1].is_zero()), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        g, s, _ = H[m][m - 1].xgcd(phi)
        inv = (s / g.coeffs()[0]) % phi
        for j in range(m + 1, n):
            if H[j][m - 1].is_zero():
                continue
            u = (H[j][m - 1] * inv) % phi
            rj, rm = H[j], H[m]
            for k in range(m - 1, n):
                if not rm[k].is_zero():
                    rj[k] = (rj[k] - u * rm[k]) % phi
            for row in H:
                if not row[j].is_zero():
                    row[m] = (row[m] + u * row[j]) % phi

    # p_m(x) = (x - h_mm) p_{m-1} - sum_i h_im * prod(h_{j,j-1}) * p_{i-1}
    polys = [[fmpq_poly([1])]]
    for m in range(n):
        prev = polys[-1]
        cur = [zero] + list(prev)
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - H[m][m] * c) % phi
        t = fmpq_poly([1])
        for i in range(m - 1, -1, -1):
            t = (t * H[i + 1][i]) % phi
            if t.is_zero():
                break
            coef = (t * H[i][m]) % phi
            if coef.is_zero():
                continue
            for k, c in enumerate(polys[i]):
                cur[k] = (cur[k] - coef * c) % phi
        polys.append(cur)
    return [CyclotomicElement._wrap(q, c) for c in polys[-1]]


def is_hermitian(M) -> bool:
    n = len(M)
    if any(len(row) != n for row in M):
        return False
    return all(M[i][j] == M[j][i].conj() for i in range(n) for j in range(i, n))


def _variations(signs) -> int:
    seq = [s for s in signs if s]
    return sum(1 for a, b in zip(seq, seq[1:]) if a != b)


def hermitian_signature(M) -> int:
    """Number of positive minus number of negative eigenvalues, computed exactly."""
    if not is_hermitian(M):
        raise NonHermitianInput("matrix is not equal to its conjugate transpose")
    n = len(M)
    if n == 0:
        return 0
    coeffs = charpoly(M)
    signs = []
    for c in coeffs:
        if not c.is_zero() and conj_poly(c.conductor, c._poly) != c._poly:
            raise ArithmeticError("characteristic polynomial is not real")
        signs.append(certified_sign(c))
    m = next(k for k, s in enumerate(signs) if s)  # multiplicity of eigenvalue 0
    tail = signs[m:]
    positive = _variations(tail)
    negative = _variations([s * (-1) ** (k + m) for k, s in enumerate(tail)])
    return positive - negative

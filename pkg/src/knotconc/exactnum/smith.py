"""Smith normal form over a Euclidean domain, with both transforms tracked.

``smith(M, dom)`` returns ``(L, Linv, D, R, Rinv)`` with ``L M R = D`` and
``M = Linv D Rinv``.  ``D`` is diagonal with ``d_1 | d_2 | ...`` and each
``d_i`` is the domain's canonical associate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .laurent import LaurentPoly
from .rings import Ring


@dataclass(frozen=True)
class Domain:
    zero: Any
    one: Any
    norm: Callable[[Any], int]
    divmod: Callable[[Any, Any], tuple]
    unit_part: Callable[[Any], Any]  # u with x == u * canonical(x)
    inverse_unit: Callable[[Any], Any]
    is_zero: Callable[[Any], bool]

    def is_unit(self, x) -> bool:
        return not self.is_zero(x) and self.norm(x) == 0


INTEGERS = Domain(
    zero=0, one=1,
    norm=lambda x: abs(x) - 1,  # units have norm 0
    divmod=divmod,
    unit_part=lambda x: -1 if x < 0 else 1,
    inverse_unit=lambda u: u,
    is_zero=lambda x: x == 0,
)


def laurent_domain(ring: Ring) -> Domain:
    """``R[t^±1]`` for a field ``R``; the Euclidean norm is the width (span of exponents)."""
    if not ring.is_field:
        raise ValueError("Smith normal form over R[t^±1] needs field coefficients")
    return Domain(
        zero=LaurentPoly(ring), one=LaurentPoly.constant(ring, 1),
        norm=lambda x: x.width,
        divmod=divmod,
        unit_part=lambda x: x.unit_part(),
        inverse_unit=lambda u: u.monomial_inverse(),
        is_zero=lambda x: x.is_zero(),
    )


def identity(n: int, dom: Domain) -> list[list]:
    return [[dom.one if i == j else dom.zero for j in range(n)] for i in range(n)]


def matmul(A, B, dom: Domain):
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(cols):
            acc = dom.zero
            for k in range(inner):
                if not dom.is_zero(row[k]) and not dom.is_zero(B[k][j]):
                    acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


class _State:
    def __init__(self, M, dom: Domain):
        self.dom = dom
        self.m = len(M)
        self.n = len(M[0]) if M else 0
        self.A = [list(r) for r in M]
        self.L, self.Linv = identity(self.m, dom), identity(self.m, dom)
        self.R, self.Rinv = identity(self.n, dom), identity(self.n, dom)

    # row_i += c * row_k
    def add_row(self, i, k, c):
        A, L, Linv = self.A, self.L, self.Linv
        A[i] = [a + c * b for a, b in zip(A[i], A[k])]
        L[i] = [a + c * b for a, b in zip(L[i], L[k])]
        for row in Linv:  # column k -= c * column i
            row[k] = row[k] - c * row[i]

    def swap_rows(self, i, k):
        if i == k:
            return
        for M in (self.A, self.L):
            M[i], M[k] = M[k], M[i]
        for row in self.Linv:
            row[i], row[k] = row[k], row[i]

    def scale_row(self, i, u, u_inv):
        self.A[i] = [u * a for a in self.A[i]]
        self.L[i] = [u * a for a in self.L[i]]
        for row in self.Linv:
            row[i] = row[i] * u_inv

    # col_j += c * col_k
    def add_col(self, j, k, c):
        for M in (self.A, self.R):
            for row in M:
                row[j] = row[j] + c * row[k]
        self.Rinv[k] = [a - c * b for a, b in zip(self.Rinv[k], self.Rinv[j])]

    def swap_cols(self, j, k):
        if j == k:
            return
        for M in (self.A, self.R):
            for row in M:
                row[j], row[k] = row[k], row[j]
        self.Rinv[j], self.Rinv[k] = self.Rinv[k], self.Rinv[j]


def smith(M, dom: Domain):
    """Smith normal form of the ``m x n`` matrix ``M`` over ``dom``."""
    st = _State(M, dom)
    A, m, n = st.A, st.m, st.n
    z, norm = dom.is_zero, dom.norm
    for k in range(min(m, n)):
        while True:
            cands = [(norm(A[i][j]), i, j) for i in range(k, m) for j in range(k, n) if not z(A[i][j])]
            if not cands:
                break
            _, i, j = min(cands)
            st.swap_rows(k, i)
            st.swap_cols(k, j)
            dirty = False
            for i in range(k + 1, m):
                if not z(A[i][k]):
                    q, r = dom.divmod(A[i][k], A[k][k])
                    st.add_row(i, k, -q)
                    dirty |= not z(r)
            for j in range(k + 1, n):
                if not z(A[k][j]):
                    q, r = dom.divmod(A[k][j], A[k][k])
                    st.add_col(j, k, -q)
                    dirty |= not z(r)
            if dirty:
                continue
            bad = next((i for i in range(k + 1, m) for j in range(k + 1, n)
                        if not z(dom.divmod(A[i][j], A[k][k])[1])), None)
            if bad is None:
                break
            st.add_row(k, bad, dom.one)
        if k < m and k < n and not z(A[k][k]):
            u = dom.unit_part(A[k][k])
            st.scale_row(k, dom.inverse_unit(u), u)
    D = [[A[i][j] for j in range(n)] for i in range(m)]
    return st.L, st.Linv, D, st.R, st.Rinv


def diagonal(D) -> list:
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]

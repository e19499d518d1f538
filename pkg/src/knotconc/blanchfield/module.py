"""Alexander modules over R[t^±1] (R a field) and the classical Blanchfield pairing."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from ..errors import SingularPresentation
from ..exactnum import LaurentPoly, Ring
from ..exactnum.smith import diagonal, laurent_domain, smith
from ..seifert import SeifertMatrix, alexander_poly


def _poly(ring: Ring, x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x if x.ring == ring else x.change_ring(ring)
    return LaurentPoly.from_json(ring, x)


def presentation_matrix(A: SeifertMatrix, ring: Ring) -> list[list[LaurentPoly]]:
    """``t A - A^T`` with entries in ``ring[t^±1]``."""
    E, n = A.entries, A.size
    return [[LaurentPoly(ring, [-E[j][i], E[i][j]]) for j in range(n)] for i in range(n)]


@dataclass(frozen=True, eq=False)
class AlexanderModule:
    """The cokernel ``R[t^±1]^rows / (column span of P)``."""

    ring: Ring
    P: tuple
    seifert: SeifertMatrix | None = field(default=None, repr=False)

    def __post_init__(self):
        if not self.ring.is_field:
            raise ValueError("Alexander modules need a field of coefficients (Q or Z/p)")
        object.__setattr__(self, "P", tuple(tuple(_poly(self.ring, x) for x in row) for row in self.P))

    @property
    def rows(self) -> int:
        return len(self.P)

    @property
    def cols(self) -> int:
        return len(self.P[0]) if self.P else 0

    @cached_property
    def _smith(self):
        return smith([list(r) for r in self.P], laurent_domain(self.ring))

    def smith_form(self):
        """``(U, D, V)`` with ``U D V = P``."""
        L, Linv, D, R, Rinv = self._smith
        return Linv, D, Rinv

    @cached_property
    def diagonal(self) -> list[LaurentPoly]:
        """Diagonal of ``D`` padded with zeros to length ``rows``."""
        d = diagonal(self._smith[2]) if self.cols else []
        return d + [LaurentPoly(self.ring)] * (self.rows - len(d))

    @cached_property
    def invariant_factors(self) -> list[LaurentPoly]:
        """The nonunit diagonal entries (zero entries stand for free summands)."""
        return [d for d in self.diagonal if not d.is_unit()]

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def is_torsion(self) -> bool:
        return all(not d.is_zero() for d in self.diagonal)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    def order(self) -> LaurentPoly:
        out = LaurentPoly.constant(self.ring, 1)
        for d in self.invariant_factors:
            out = out * d
        return out.normalized()

    def smith_coordinates(self, x) -> list[LaurentPoly]:
        """Coordinates of the class of ``x`` in the diagonal basis."""
        L = self._smith[0]
        x = [_poly(self.ring, c) for c in x]
        if len(x) != self.rows:
            raise ValueError(f"expected a vector of length {self.rows}")
        zero = LaurentPoly(self.ring)
        out = []
        for row in L:
            acc = zero
            for a, b in zip(row, x):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def diagonal_generator(self, i: int) -> list[LaurentPoly]:
        """Column ``i`` of ``U``: the generator of the ``i``-th cyclic summand."""
        Linv = self._smith[1]
        return [Linv[r][i] for r in range(self.rows)]

    def to_json(self) -> dict:
        return {
            "ring": self.ring.tag(),
            "invariant_factors": [d.to_json() for d in self.invariant_factors],
            "cyclic": self.is_cyclic,
        }


def module_from_seifert(A: SeifertMatrix, ring: Ring) -> AlexanderModule:
    return _seifert_module(A, ring)


@lru_cache(maxsize=256)
def _seifert_module(A: SeifertMatrix, ring: Ring) -> AlexanderModule:
    return AlexanderModule(ring, tuple(map(tuple, presentation_matrix(A, ring))), A)


def module_from_matrix(P, ring: Ring) -> AlexanderModule:
    return AlexanderModule(ring, tuple(map(tuple, P)))


def smith_normal_form(M, ring: Ring):
    """``(U, D, V)`` with ``U D V = M`` over ``ring[t^±1]``."""
    return module_from_matrix(M, ring).smith_form()


# -- pairing values --------------------------------------------------------


class BlanchfieldValue:
    """A class in Frac(R[t^±1]) / R[t^±1], stored as ``num / den`` in canonical form.

    ``den`` is normalized and coprime to ``num``; ``num`` is the residue
    modulo ``den``.  The zero class has ``den == 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den) if not num.is_zero() else den.normalized()
        num, den = num.exact_div(g), den.exact_div(g)
        u = den.unit_part()
        num, den = num * u.monomial_inverse(), den.normalized()
        if den.is_unit():
            num, den = LaurentPoly(den.ring), LaurentPoly.constant(den.ring, 1)
        else:
            num = num.residue(den)
        self.num, self.den = num, den

    @classmethod
    def zero(cls, ring: Ring) -> "BlanchfieldValue":
        return cls(LaurentPoly(ring), LaurentPoly.constant(ring, 1))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "BlanchfieldValue") -> "BlanchfieldValue":
        return BlanchfieldValue(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return BlanchfieldValue(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: LaurentPoly) -> "BlanchfieldValue":
        return BlanchfieldValue(self.num * f, self.den)

    def conj(self) -> "BlanchfieldValue":
        return BlanchfieldValue(self.num.conj(), self.den.conj())

    def __eq__(self, other):
        if not isinstance(other, BlanchfieldValue):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json()}

    def __str__(self):
        return "0" if self.is_zero() else f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"BlanchfieldValue({self})"


def _pairing(mod: AlexanderModule, x, y) -> BlanchfieldValue:
    """``(1 - t) conj(x)^T P^-1 y`` using ``P^-1 = R D^-1 L``."""
    ring = mod.ring
    L, _, D, R, _ = mod._smith
    d = mod.diagonal
    if any(di.is_zero() for di in d):
        raise SingularPresentation("presentation matrix is singular over this ring")
    xb = [_poly(ring, c).conj() for c in x]
    n = mod.rows
    if len(xb) != n:
        raise ValueError(f"expected a vector of length {n}")
    ly = mod.smith_coordinates(y)
    top = d[-1] if d else LaurentPoly.constant(ring, 1)
    total = LaurentPoly(ring)
    for i in range(n):
        if ly[i].is_zero():
            continue
        rx = LaurentPoly(ring)
        for j in range(n):
            if not R[j][i].is_zero() and not xb[j].is_zero():
                rx = rx + R[j][i] * xb[j]
        if rx.is_zero():
            continue
        total = total + rx * ly[i] * top.exact_div(d[i])
    one_minus_t = LaurentPoly(ring, [1, -1])
    return BlanchfieldValue(one_minus_t * total, top)


def blanchfield_pair(A: SeifertMatrix, ring: Ring, x, y) -> BlanchfieldValue:
    """Blanchfield pairing of the classes of ``x`` and ``y`` (vectors over ``ring[t^±1]``)."""
    return _pairing(module_from_seifert(A, ring), x, y)


def _all_units(M, ring: Ring) -> bool:
    if not M:
        return True
    _, _, D, _, _ = smith(M, laurent_domain(ring))
    d = diagonal(D)
    return len(d) == len(M) and all(x.is_unit() for x in d)


def is_nonsingular(A: SeifertMatrix, ring: Ring) -> bool:
    """Whether the adjoint of the pairing is an isomorphism onto the dual module.

    With ``g_i`` the generators of the cyclic summands ``R/(d_i)``, the map
    ``y -> (conj(d_j) * Bl(g_j, y))_j`` lands in the sum of ``R/(conj d_j)``; it
    is onto (equivalently injective, the dimensions agree) exactly when the
    columns of ``[B | diag(conj d_j)]`` span, i.e. all invariant factors are units.
    """
    mod = module_from_seifert(A, ring)
    idx = [i for i, d in enumerate(mod.diagonal) if not d.is_unit()]
    if not idx:
        return True
    gens = {i: mod.diagonal_generator(i) for i in idx}
    rows = []
    for a, j in enumerate(idx):
        dj = mod.diagonal[j].conj()
        row = []
        for i in idx:
            v = _pairing(mod, gens[j], gens[i])
            row.append((v.num * dj).exact_div(v.den) if not v.is_zero() else LaurentPoly(ring))
        row += [dj if b == a else LaurentPoly(ring) for b in range(len(idx))]
        rows.append(row)
    return _all_units(rows, ring)


def generates(A: SeifertMatrix, ring: Ring, x) -> bool:
    """Whether the class of ``x`` generates the whole module."""
    return generates_module(module_from_seifert(A, ring), x)


def generates_module(mod: AlexanderModule, x) -> bool:
    c = mod.smith_coordinates(x)
    idx = [i for i, d in enumerate(mod.diagonal) if not d.is_unit()]
    if not idx:
        return True
    rows = []
    for a, i in enumerate(idx):
        rows.append([c[i]] + [mod.diagonal[i] if b == a else LaurentPoly(mod.ring) for b in range(len(idx))])
    return _all_units(rows, mod.ring)


def self_annihilating(A: SeifertMatrix, ring: Ring, gens) -> bool:
    """Whether the pairing vanishes on all pairs of the given generators."""
    mod = module_from_seifert(A, ring)
    gens = list(gens)
    return all(_pairing(mod, x, y).is_zero() for x in gens for y in gens)


def mod_p_nontrivial(A: SeifertMatrix, p: int) -> bool:
    """Whether the Alexander polynomial stays a nonunit in Z/p[t^±1]."""
    return delta_mod_p_nontrivial(alexander_poly(A), p)


def delta_mod_p_nontrivial(delta: LaurentPoly, p: int) -> bool:
    red = delta.change_ring(Ring.mod(p)).normalized()
    return len(red.terms()) >= 2

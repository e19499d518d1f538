"""Abelian-level evaluation of descriptors: signatures, Alexander polynomials and rho-invariants.

A (r, 1)-cable reparametrizes: sigma(w) = sigma_K(w^r) and Delta(t) = Delta_K(t^r).
The signature identity is unconditional when w has prime-power order and
holds elsewhere as long as w^r is not a root of Delta_K.  Infection along a
linking-number-zero curve leaves Delta, Arf and sigma unchanged.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..errors import ArfNonzero, ExceptionalPoint, UnsupportedNode
from ..exactnum import ZZ, Ring, UnitCirclePoint, eval_at_root
from ..exactnum.laurent import LaurentPoly
from ..seifert import (SeifertMatrix, StepFunction, alexander_poly, connected_sum,
                       levine_tristram, mirror, signature_function)
from .nodes import Atom, Cable, Infection, KnotDescriptor, Mirror, OrderSpec, Sum


@lru_cache(maxsize=4096)
def _delta(K: KnotDescriptor) -> LaurentPoly:
    """Alexander polynomial over Z, infections read through to the carrier."""
    if isinstance(K, Atom):
        return alexander_poly(K.matrix)
    if isinstance(K, Sum):
        out = LaurentPoly.constant(ZZ, 1)
        for part in K.parts:
            out = out * _delta(part)
        return out.normalized()
    if isinstance(K, Mirror):
        return _delta(K.knot).conj().normalized()
    if isinstance(K, Cable):
        return _delta(K.knot).subs_power(K.r).normalized()
    if isinstance(K, Infection):
        return _delta(K.carrier)
    raise TypeError(f"not a descriptor: {K!r}")


def _has_infection(K: KnotDescriptor) -> bool:
    if isinstance(K, Atom):
        return False
    if isinstance(K, Sum):
        return any(_has_infection(p) for p in K.parts)
    if isinstance(K, (Mirror, Cable)):
        return _has_infection(K.knot)
    return True


def alex_eval(K: KnotDescriptor, ring: Ring = ZZ) -> LaurentPoly:
    """Normalized Alexander polynomial of an infection-free descriptor."""
    if _has_infection(K):
        raise UnsupportedNode("Alexander evaluation is defined for infection-free descriptors")
    delta = _delta(K)
    return delta if ring == ZZ else delta.change_ring(ring).normalized()


def abelian_delta(K: KnotDescriptor) -> LaurentPoly:
    """Alexander polynomial with infection nodes treated as their carriers."""
    return _delta(K)


@lru_cache(maxsize=4096)
def determinant_eval(K: KnotDescriptor) -> int:
    """``|Delta_K(-1)|``, multiplicative over sums and read through cables at ``(-1)^r``."""
    if isinstance(K, Atom):
        return abs(alexander_poly(K.matrix)(-1))
    if isinstance(K, Sum):
        out = 1
        for p in K.parts:
            out *= determinant_eval(p)
        return out
    if isinstance(K, Mirror):
        return determinant_eval(K.knot)
    if isinstance(K, Cable):
        return determinant_eval(K.knot) if K.r % 2 else 1
    if isinstance(K, Infection):
        return determinant_eval(K.carrier)
    raise TypeError(f"not a descriptor: {K!r}")


def arf_eval(K: KnotDescriptor) -> int:
    """Arf invariant: zero exactly when ``Delta(-1)`` is +-1 mod 8."""
    return 0 if determinant_eval(K) % 8 in (1, 7) else 1


@lru_cache(maxsize=65536)
def sigma_eval(K: KnotDescriptor, w: UnitCirclePoint) -> int:
    """Levine-Tristram signature of the described knot at ``w``."""
    if isinstance(K, Atom):
        return levine_tristram(K.matrix, w)
    if isinstance(K, Sum):
        return sum(sigma_eval(p, w) for p in K.parts)
    if isinstance(K, Mirror):
        return -sigma_eval(K.knot, w)
    if isinstance(K, Cable):
        wr = w ** K.r
        if not w.is_prime_power_order() and eval_at_root(_delta(K.knot), wr).is_zero():
            raise ExceptionalPoint(f"{w} is an exceptional point of cable({K.r}, ...): {wr} is a root "
                                   f"of the companion's Alexander polynomial")
        return sigma_eval(K.knot, wr)
    if isinstance(K, Infection):
        return sigma_eval(K.carrier, w)
    raise TypeError(f"not a descriptor: {K!r}")


@lru_cache(maxsize=4096)
def signature_step(K: KnotDescriptor) -> StepFunction:
    """Exact signature step function of an infection-free descriptor."""
    if isinstance(K, Atom):
        return signature_function(K.matrix)
    if isinstance(K, Sum):
        out = StepFunction.zero()
        for p in K.parts:
            out = out + signature_step(p)
        return out
    if isinstance(K, Mirror):
        return -signature_step(K.knot)
    if isinstance(K, Cable):
        return signature_step(K.knot).pullback(K.r)
    if isinstance(K, Infection):
        raise UnsupportedNode("signature step functions are not built through infection nodes")
    raise TypeError(f"not a descriptor: {K!r}")


def rho_abelian(K: KnotDescriptor, d) -> Fraction:
    """Sum of sigma over the d-th roots of unity, or the normalized integral when d is infinite."""
    d = OrderSpec.parse(d)
    if d.is_infinite:
        return signature_step(K).integral()
    return Fraction(sum(sigma_eval(K, UnitCirclePoint(d.d, r)) for r in range(d.d)))


def infection_rho(K: KnotDescriptor, eta_order, J: KnotDescriptor, carrier_is_slice: bool = True) -> Fraction:
    """rho-invariant contributed by infecting the slice knot ``K`` by ``J`` along a curve of the given order."""
    if not carrier_is_slice:
        raise ValueError("the carrier must be asserted slice")
    if arf_eval(J) != 0:
        raise ArfNonzero(f"Arf({J}) = 1")
    return rho_abelian(J, eta_order)


def to_seifert(K: KnotDescriptor) -> SeifertMatrix:
    """A Seifert matrix for descriptors built from atoms, sums and mirrors only."""
    if isinstance(K, Atom):
        return K.matrix
    if isinstance(K, Sum):
        out = to_seifert(K.parts[0])
        for p in K.parts[1:]:
            out = connected_sum(out, to_seifert(p))
        return out
    if isinstance(K, Mirror):
        return mirror(to_seifert(K.knot))
    raise UnsupportedNode(f"no Seifert matrix for {type(K).__name__} nodes")

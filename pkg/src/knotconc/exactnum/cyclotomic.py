"""Exact points of the unit circle and elements of cyclotomic fields.

``CyclotomicElement`` stores a rational vector in the power basis of a
primitive ``q``-th root of unity, i.e. a FLINT rational polynomial reduced
modulo the ``q``-th cyclotomic polynomial.  Zero testing is algebraic;
signs of real elements are certified with interval arithmetic whose
precision is raised until the enclosure excludes zero.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath
from flint import fmpq, fmpq_poly, fmpz_poly
from mpmath.ctx_iv import MPIntervalContext

from .laurent import LaurentPoly


@dataclass(frozen=True, order=True)
class UnitCirclePoint:
    """The point ``exp(2*pi*i * numerator/order)`` with the fraction in lowest terms."""

    order: int
    numerator: int

    def __post_init__(self):
        q, r = int(self.order), int(self.numerator)
        if q < 1:
            raise ValueError("order must be positive")
        r %= q
        g = gcd(r, q)
        object.__setattr__(self, "order", q // g)
        object.__setattr__(self, "numerator", r // g)

    @classmethod
    def from_turns(cls, turns) -> "UnitCirclePoint":
        f = Fraction(turns)
        return cls(f.denominator, f.numerator)

    @classmethod
    def parse(cls, text: str) -> "UnitCirclePoint":
        """``"r/q"`` in turns (fractions of a full circle); ``"-1"`` and ``"1"`` are accepted."""
        text = text.strip()
        if text == "-1":
            return cls(2, 1)
        return cls.from_turns(Fraction(text))

    @property
    def turns(self) -> Fraction:
        return Fraction(self.numerator, self.order)

    def conj(self) -> "UnitCirclePoint":
        return UnitCirclePoint(self.order, -self.numerator)

    def __pow__(self, k: int) -> "UnitCirclePoint":
        return UnitCirclePoint(self.order, self.numerator * k)

    def __mul__(self, other: "UnitCirclePoint") -> "UnitCirclePoint":
        return UnitCirclePoint.from_turns(self.turns + other.turns)

    def is_one(self) -> bool:
        return self.order == 1

    def in_upper_half(self) -> bool:
        """True on the closed upper semicircle minus 1, i.e. turns in (0, 1/2]."""
        return 0 < self.turns <= Fraction(1, 2)

    def is_prime_power_order(self) -> bool:
        """Order ``p**a`` with ``a >= 0`` (the point 1 counts)."""
        return self.order == 1 or _is_prime_power(self.order)

    def __complex__(self):
        import cmath

        return cmath.exp(2j * cmath.pi * self.numerator / self.order)

    def __str__(self):
        return f"{self.numerator}/{self.order}"


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


@lru_cache(maxsize=None)
def cyclotomic_modulus(q: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(q).coeffs())


@lru_cache(maxsize=None)
def _x_power(q: int, e: int) -> fmpq_poly:
    return fmpq_poly([0] * e + [1]) % cyclotomic_modulus(q)


class CyclotomicElement:
    __slots__ = ("conductor", "_poly")

    def __init__(self, conductor: int, coords=()):
        """``coords[k]`` is the coefficient of ``zeta**k`` (any length; reduced)."""
        self.conductor = int(conductor)
        vals = [fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in coords]
        self._poly = fmpq_poly(vals) % cyclotomic_modulus(self.conductor)

    @classmethod
    def _wrap(cls, q: int, poly: fmpq_poly) -> "CyclotomicElement":
        obj = cls.__new__(cls)
        obj.conductor = q
        obj._poly = poly
        return obj

    @classmethod
    def rational(cls, q: int, c) -> "CyclotomicElement":
        return cls(q, [c])

    @classmethod
    def zeta(cls, q: int, k: int = 1) -> "CyclotomicElement":
        return cls._wrap(q, _x_power(q, k % q))

    @classmethod
    def at_point(cls, w: UnitCirclePoint) -> "CyclotomicElement":
        return cls.zeta(w.order, w.numerator)

    @property
    def degree(self) -> int:
        """Dimension of the field over Q."""
        return cyclotomic_modulus(self.conductor).degree()

    def coords(self) -> list:
        cs = [Fraction(int(c.p), int(c.q)) for c in self._poly.coeffs()]
        return cs + [Fraction(0)] * (self.degree - len(cs))

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def lift(self, q: int) -> "CyclotomicElement":
        """Re-express in the field of conductor ``q`` (a multiple of ours)."""
        if q == self.conductor:
            return self
        if q % self.conductor:
            raise ValueError(f"{q} is not a multiple of {self.conductor}")
        step = q // self.conductor
        sub = fmpq_poly([0] * step + [1])
        return CyclotomicElement._wrap(q, self._poly(sub) % cyclotomic_modulus(q))

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicElement.rational(self.conductor, other)
        if not isinstance(other, CyclotomicElement):
            return None
        if other.conductor == self.conductor:
            return self, other
        q = lcm(self.conductor, other.conductor)
        return self.lift(q), other.lift(q)

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return CyclotomicElement._wrap(a.conductor, a._poly + b._poly)

    __radd__ = __add__

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return CyclotomicElement._wrap(a.conductor, a._poly - b._poly)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CyclotomicElement._wrap(self.conductor, -self._poly)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return CyclotomicElement._wrap(self.conductor, self._poly * fmpq(f.numerator, f.denominator))
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return CyclotomicElement._wrap(a.conductor, (a._poly * b._poly) % cyclotomic_modulus(a.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = self._poly.xgcd(cyclotomic_modulus(self.conductor))
        return CyclotomicElement._wrap(self.conductor, (s / g.coeffs()[0]) % cyclotomic_modulus(self.conductor))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def conj(self) -> "CyclotomicElement":
        """Complex conjugation ``zeta -> zeta**(q-1)``."""
        q = self.conductor
        return CyclotomicElement._wrap(q, conj_poly(q, self._poly))

    def is_real(self) -> bool:
        return self == self.conj()

    def __eq__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        a, b = pr
        return a._poly == b._poly

    __hash__ = None

    def to_complex(self, dps: int = 30):
        with mpmath.workdps(dps):
            z = mpmath.exp(2j * mpmath.pi / self.conductor)
            return sum((mpmath.mpf(c.numerator) / c.denominator * z ** k
                        for k, c in enumerate(self.coords())), mpmath.mpc(0))

    def __repr__(self):
        return f"CyclotomicElement({self.conductor}, {[str(c) for c in self.coords()]})"


def conj_poly(q: int, poly: fmpq_poly) -> fmpq_poly:
    if q <= 2 or poly.degree() <= 0:
        return poly
    return poly(_x_power_raw(q, q - 1)) % cyclotomic_modulus(q)


@lru_cache(maxsize=None)
def _x_power_raw(q: int, e: int) -> fmpq_poly:
    return fmpq_poly([0] * e + [1])


def eval_at_root(p: LaurentPoly, w: UnitCirclePoint) -> CyclotomicElement:
    """Exact value of a Laurent polynomial with integer/rational coefficients at ``w``."""
    if p.ring.kind == "Zp":
        raise ValueError("coefficients must embed in the rationals")
    q, r = w.order, w.numerator
    buckets = [Fraction(0)] * q
    for e, c in p.terms().items():
        buckets[(e * r) % q] += Fraction(c)
    return CyclotomicElement(q, buckets)


# -- certified signs ------------------------------------------------------

_local = threading.local()


def _iv_context() -> MPIntervalContext:
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = MPIntervalContext()
    return ctx


def _cos_table(q: int, n: int, prec: int):
    cache = getattr(_local, "cos", None)
    if cache is None:
        cache = _local.cos = {}
    key = (q, n, prec)
    if key not in cache:
        ctx = _iv_context()
        ctx.prec = prec
        cache[key] = [ctx.cos(2 * ctx.pi * k / q) for k in range(n)]
    return cache[key]


def real_part_enclosure(x: CyclotomicElement, prec: int):
    """Interval enclosing the real part of ``x``."""
    ctx = _iv_context()
    cs = x.coords()
    table = _cos_table(x.conductor, len(cs), prec)
    ctx.prec = prec
    total = ctx.mpf(0)
    for c, cos_k in zip(cs, table):
        if c:
            total += ctx.mpf(c.numerator) / c.denominator * cos_k
    return total


def certified_sign(x: CyclotomicElement, max_prec: int = 1 << 16) -> int:
    """Exact sign of a real cyclotomic number.

    Zero is decided on the reduced coordinates; otherwise the working
    precision doubles until the interval enclosure excludes zero.
    """
    if x.is_zero():
        return 0
    if not x.is_real():
        raise ValueError("certified_sign needs a conjugation-fixed element")
    prec = 64
    while prec <= max_prec:
        iv = real_part_enclosure(x, prec)
        if iv.a > 0:
            return 1
        if iv.b < 0:
            return -1
        prec *= 2
    raise ArithmeticError("sign not resolved; precision limit reached")

"""Laurent polynomials in one variable ``t`` over Z, Q or Z/p.

A value is stored as ``t**low * P(t)`` where ``P`` is a FLINT polynomial with
nonzero constant term (or ``P == 0`` and ``low == 0``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from flint import fmpq, fmpq_poly, fmpz_poly, nmod_poly

from .rings import QQ, ZZ, Ring


def _backend(ring: Ring, coeffs):
    if ring.kind == "Z":
        return fmpz_poly([int(c) for c in coeffs])
    if ring.kind == "Q":
        out = []
        for c in coeffs:
            c = Fraction(c)
            out.append(fmpq(c.numerator, c.denominator))
        return fmpq_poly(out)
    return nmod_poly([ring.coerce(c) for c in coeffs], ring.p)


def _scalar(ring: Ring, c):
    """Convert a FLINT coefficient to int / Fraction."""
    if ring.kind == "Q":
        return Fraction(int(c.p), int(c.q))
    return int(c)


class LaurentPoly:
    __slots__ = ("ring", "_poly", "_low")

    def __init__(self, ring: Ring, coeffs=(), low: int = 0):
        """``coeffs[k]`` is the coefficient of ``t**(low + k)``."""
        self._set(ring, _backend(ring, list(coeffs)), low)

    def _set(self, ring, poly, low):
        self.ring = ring
        if poly.is_zero():
            self._poly, self._low = poly, 0
            return
        cs = poly.coeffs()
        k = 0
        while cs[k] == 0:
            k += 1
        if k:
            poly = poly.right_shift(k)
        self._poly, self._low = poly, low + k

    @classmethod
    def _wrap(cls, ring, poly, low=0) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._set(ring, poly, low)
        return obj

    # -- constructors -------------------------------------------------

    @classmethod
    def from_dict(cls, ring: Ring, terms: dict) -> "LaurentPoly":
        terms = {int(e): c for e, c in terms.items() if c != 0}
        if not terms:
            return cls(ring)
        lo, hi = min(terms), max(terms)
        return cls(ring, [terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def constant(cls, ring: Ring, c) -> "LaurentPoly":
        return cls(ring, [c])

    @classmethod
    def monomial(cls, ring: Ring, exponent: int, c=1) -> "LaurentPoly":
        return cls(ring, [c], exponent)

    @classmethod
    def t(cls, ring: Ring) -> "LaurentPoly":
        return cls(ring, [1], 1)

    # -- basic data ---------------------------------------------------

    @property
    def low(self) -> int:
        return self._low

    @property
    def high(self) -> int:
        return self._low + self._poly.degree() if not self.is_zero() else 0

    @property
    def width(self) -> int:
        """Euclidean size: ``high - low``; ``-1`` for zero."""
        return self._poly.degree() if not self.is_zero() else -1

    def is_zero(self) -> bool:
        return self._poly.is_zero()

    def coeffs(self) -> list:
        return [_scalar(self.ring, c) for c in self._poly.coeffs()]

    def terms(self) -> dict:
        return {self._low + k: c for k, c in enumerate(self.coeffs()) if c != 0}

    def coefficient(self, e: int):
        k = e - self._low
        cs = self._poly.coeffs()
        if self.is_zero() or k < 0 or k >= len(cs):
            return self.ring.coerce(0)
        return _scalar(self.ring, cs[k])

    def leading_coefficient(self):
        return _scalar(self.ring, self._poly.leading_coefficient()) if not self.is_zero() else self.ring.coerce(0)

    def is_monomial(self) -> bool:
        return not self.is_zero() and self._poly.degree() == 0

    def is_unit(self) -> bool:
        if not self.is_monomial():
            return False
        if self.ring.kind == "Z":
            return abs(self.leading_coefficient()) == 1
        return True

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self._low, other._low)
        a = self._poly.left_shift(self._low - lo)
        b = other._poly.left_shift(other._low - lo)
        return LaurentPoly._wrap(self.ring, a + b, lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap(self.ring, -self._poly, self._low)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._wrap(self.ring, self._poly * other._poly, self._low + other._low)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.monomial_inverse() ** (-n)
        return LaurentPoly._wrap(self.ring, self._poly ** n, self._low * n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._low == other._low and self._poly == other._poly

    def __hash__(self):
        return hash((self.ring, self._low, tuple(self.coeffs())))

    def monomial_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit in {self.ring}[t^±1]")
        c = self.leading_coefficient()
        if self.ring.kind == "Zp":
            inv = pow(c, -1, self.ring.p)
        elif self.ring.kind == "Z":
            inv = c
        else:
            inv = 1 / c
        return LaurentPoly.monomial(self.ring, -self._low, inv)

    def __divmod__(self, other):
        """Euclidean division with respect to ``width`` (field coefficients only)."""
        other = self._coerce(other)
        if not self.ring.is_field:
            raise ValueError("Euclidean division needs field coefficients")
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        q, r = divmod(self._poly, other._poly)
        return (LaurentPoly._wrap(self.ring, q, self._low - other._low),
                LaurentPoly._wrap(self.ring, r, self._low))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if self.ring.kind == "Z":
            q = LaurentPoly(QQ, self.coeffs(), self._low).exact_div(other.change_ring(QQ))
            return q.change_ring(ZZ)
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def gcd(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if self.is_zero():
            return other.normalized()
        if other.is_zero():
            return self.normalized()
        return LaurentPoly._wrap(self.ring, self._poly.gcd(other._poly)).normalized()

    # -- substitutions ------------------------------------------------

    def conj(self) -> "LaurentPoly":
        """The involution ``t -> t^-1``."""
        cs = self.coeffs()
        return LaurentPoly(self.ring, cs[::-1], -self.high)

    def subs_power(self, r: int) -> "LaurentPoly":
        """Substitute ``t -> t**r``."""
        if r == 0:
            return LaurentPoly.constant(self.ring, sum(self.coeffs()))
        terms = {}
        for e, c in self.terms().items():
            terms[e * r] = terms.get(e * r, 0) + c
        return LaurentPoly.from_dict(self.ring, terms)

    def __call__(self, x):
        """Evaluate at a scalar (``x`` must be invertible if negative exponents occur)."""
        total = self.ring.coerce(0)
        for e, c in self.terms().items():
            if self.ring.kind == "Zp":
                total = (total + c * pow(int(x), e, self.ring.p)) % self.ring.p
            else:
                total += c * Fraction(x) ** e
        if self.ring.kind == "Z" and isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def change_ring(self, ring: Ring) -> "LaurentPoly":
        return LaurentPoly(ring, self.coeffs(), self._low)

    # -- normalization ------------------------------------------------

    def normalized(self) -> "LaurentPoly":
        """Canonical associate: lowest exponent 0, then

        * Z: sign making the value at 1 positive (leading coefficient if that value is 0);
        * Q: additionally primitive with integer coefficients;
        * Z/p: monic.
        """
        if self.is_zero():
            return self
        if self.ring.kind == "Zp":
            inv = pow(int(self._poly.leading_coefficient()), -1, self.ring.p)
            return LaurentPoly._wrap(self.ring, self._poly * inv, 0)
        cs = self.coeffs()
        if self.ring.kind == "Q":
            den = reduce(lcm, (c.denominator for c in cs), 1)
            ints = [int(c * den) for c in cs]
            g = reduce(gcd, ints, 0)
            cs = [Fraction(c, g) for c in ints]
        s = sum(cs)
        if s < 0 or (s == 0 and cs[-1] < 0):
            cs = [-c for c in cs]
        return LaurentPoly(self.ring, cs, 0)

    def is_alexander_normalized(self) -> bool:
        return self == self.normalized()

    def unit_part(self) -> "LaurentPoly":
        """The unit ``u`` with ``self == u * self.normalized()``."""
        if self.is_zero():
            return LaurentPoly.constant(self.ring, 1)
        n = self.normalized()
        c = self.leading_coefficient()
        nc = n.leading_coefficient()
        if self.ring.kind == "Zp":
            scale = c * pow(int(nc), -1, self.ring.p) % self.ring.p
        else:
            scale = Fraction(c) / Fraction(nc)
            if self.ring.kind == "Z":
                scale = int(scale)
        return LaurentPoly.monomial(self.ring, self._low - n._low, scale)

    # -- residues modulo a polynomial ---------------------------------

    def residue(self, modulus: "LaurentPoly") -> "LaurentPoly":
        """Canonical representative of ``self`` in ``R[t^±1]/(modulus)``.

        The result is a polynomial (lowest exponent >= 0) of degree below the
        width of ``modulus``.  Field coefficients only.
        """
        m = modulus.normalized()
        if m.width <= 0:
            return LaurentPoly(self.ring)
        if self._low >= 0:
            return LaurentPoly._wrap(self.ring, self._poly.left_shift(self._low) % m._poly)
        base = self._poly % m._poly
        t_inv = _t_inverse(m)
        # multiply by t^low = (t^-1)^(-low)
        r = base
        k = -self._low
        power = t_inv
        while k:
            if k & 1:
                r = (r * power) % m._poly
            power = (power * power) % m._poly
            k >>= 1
        return LaurentPoly._wrap(self.ring, r)

    # -- presentation -------------------------------------------------

    def to_json(self) -> dict:
        cs = self.coeffs()
        if self.ring.kind == "Q":
            cs = [str(c) if c.denominator != 1 else int(c) for c in cs]
        return {"low": self._low, "coeffs": cs}

    @classmethod
    def from_json(cls, ring: Ring, data) -> "LaurentPoly":
        """Accepts an int, a coefficient list (constant term first) or ``{"low", "coeffs"}``."""
        if isinstance(data, (int, str)):
            return cls.constant(ring, Fraction(data))
        if isinstance(data, list):
            return cls(ring, [Fraction(c) for c in data])
        return cls(ring, [Fraction(c) for c in data["coeffs"]], int(data.get("low", 0)))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e, c in sorted(self.terms().items(), reverse=True):
            neg = self.ring.kind != "Zp" and c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly[{self.ring}]({self})"


def _t_inverse(m: "LaurentPoly"):
    """``t^-1`` modulo the normalized polynomial ``m`` (nonzero constant term)."""
    c0 = m._poly.coeffs()[0]
    # t * (m - m(0)) / t == m - m(0)  =>  t^-1 = -(m - m(0)) / (t * m(0))
    if m.ring.kind == "Zp":
        inv = pow(int(c0), -1, m.ring.p)
    else:
        inv = 1 / c0
    q = (m._poly - c0).right_shift(1)
    return (-q * inv) % m._poly


def poly_from_string(ring: Ring, text: str) -> LaurentPoly:
    """Parse simple expressions like ``"t^2 - 3t + 1"`` or ``"2*t^-1 + 1/2"``."""
    import re

    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    terms = {}
    for chunk in re.split(r"(?<!\^)(?=[+-])", s):
        if not chunk:
            continue
        sign, body = chunk[0], chunk[1:]
        m = re.fullmatch(r"(\d+(?:/\d+)?)?\*?(t(?:\^(-?\d+))?)?", body)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        c = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        e = 0 if m.group(2) is None else int(m.group(3) or 1)
        terms[e] = terms.get(e, 0) + (c if sign == "+" else -c)
    return LaurentPoly.from_dict(ring, terms)

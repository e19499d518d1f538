"""The full Levine-Tristram signature function and its normalized integral."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly, fmpz_poly

from ..errors import IrrationalJumpAngle
from ..exactnum import CyclotomicElement, LaurentPoly, UnitCirclePoint, certified_sign
from .invariants import alexander_poly, levine_tristram
from .matrix import SeifertMatrix
from .stepfunction import StepFunction


def _compact_form(f: fmpz_poly) -> fmpq_poly:
    """For palindromic ``f`` of degree 2m, the ``g`` with ``f(t) = t^m g(t + 1/t)``."""
    cs = [int(c) for c in f.coeffs()]
    m = len(cs) // 2
    x = fmpq_poly([0, 1])
    d_prev, d_cur = fmpq_poly([2]), x  # D_0 = 2, D_1 = x, D_k(t + 1/t) = t^k + t^-k
    g = fmpq_poly([cs[m]])
    for k in range(1, m + 1):
        g += cs[m + k] * d_cur
        d_prev, d_cur = d_cur, x * d_cur - d_prev
    return g


def _sturm_chain(g: fmpq_poly) -> list[fmpq_poly]:
    chain = [g, g.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree() > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations_at(chain, x: Fraction) -> int:
    vals = [p(fmpq(x.numerator, x.denominator)) for p in chain]
    signs = [1 if v > 0 else -1 for v in vals if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _isolate(g: fmpq_poly, lo: Fraction, hi: Fraction, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals (rational) for the roots of squarefree ``g`` in ``(lo, hi)``."""
    chain = _sturm_chain(g)

    def count(a, b):
        return _variations_at(chain, a) - _variations_at(chain, b)

    out, stack = [], [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= width:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        if g(fmpq(mid.numerator, mid.denominator)) == 0:
            out.append((mid, mid))
            eps = width / 4
            stack += [(a, mid - eps), (mid + eps, b)]
        else:
            stack += [(a, mid), (mid, b)]
    return sorted(out)


def unit_circle_roots(delta: LaurentPoly):
    """Roots of ``delta`` on the upper semicircle.

    Returns ``(exact, irrational)``: rational turns in ``(0, 1/2]`` of the
    roots of unity, and rational isolating intervals ``[l, h]`` for
    ``x = 2 cos(theta)`` of the other unit-circle roots.
    """
    f = fmpz_poly([int(c) for c in delta.coeffs()])
    exact, irrational = set(), []
    if f.degree() <= 0:
        return [], []
    _, factors = f.factor()
    for h, _mult in factors:
        m = h.is_cyclotomic()
        if m:
            exact.update(Fraction(k, m) for k in range(1, m // 2 + 1) if math.gcd(k, m) == 1)
            continue
        cs = [int(c) for c in h.coeffs()]
        if h.degree() % 2 or cs != cs[::-1]:
            continue  # an irreducible non-palindromic factor has no roots on the circle
        g = _compact_form(h)
        irrational += _isolate(g, Fraction(-2), Fraction(2), Fraction(1, 10**15))
    return sorted(exact), irrational


@lru_cache(maxsize=1024)
def _signature_function(entries: tuple) -> StepFunction:
    A = SeifertMatrix(entries)
    delta = alexander_poly(A)
    exact, irrational = unit_circle_roots(delta)

    def arc(s):
        return levine_tristram(A, UnitCirclePoint.from_turns(s))

    if not irrational:
        return StepFunction.build([(s, s) for s in exact], arc, arc)

    brackets = [(s, s) for s in exact]
    xb = []
    for l, h in irrational:
        tl = Fraction(math.acos(min(float(h) / 2, 1.0)) / (2 * math.pi) - 1e-12)
        th = Fraction(math.acos(max(float(l) / 2, -1.0)) / (2 * math.pi) + 1e-12)
        brackets.append((tl, th))
        xb.append((tl, th, l, h))
    brackets.sort()
    if any(b[1] >= c[0] for b, c in zip(brackets, brackets[1:])):
        raise IrrationalJumpAngle("could not separate unit-circle roots")

    def sample_ok(s, a, b):
        w = UnitCirclePoint.from_turns(s)
        x = CyclotomicElement.at_point(w) + CyclotomicElement.at_point(w.conj())
        for tl, th, l, h in xb:
            if s < tl and certified_sign(x - h) <= 0:
                return False
            if s > th and certified_sign(x - l) >= 0:
                return False
        return True

    sampled = StepFunction.build(brackets, arc, arc, sample_ok)
    raise IrrationalJumpAngle(
        f"Alexander polynomial {delta} has unit-circle roots that are not roots of unity",
        sampled=sampled)


def signature_function(A: SeifertMatrix, allow_sampled: bool = False) -> StepFunction:
    """Exact step function of ``w -> sigma_A(w)``.

    Jumps sit exactly at the unit-circle roots of the Alexander polynomial.
    If one of them is not a root of unity, :class:`IrrationalJumpAngle` is
    raised carrying the sampled form, or the sampled form is returned when
    ``allow_sampled`` is set.
    """
    try:
        return _signature_function(A.entries)
    except IrrationalJumpAngle as exc:
        if allow_sampled and exc.sampled is not None:
            return exc.sampled
        raise


def signature_integral(f: StepFunction) -> Fraction:
    return f.integral()

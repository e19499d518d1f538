"""Conjugation-symmetric integer step functions on the unit circle.

Only the upper semicircle (turns in ``(0, 1/2]``) is stored; the value at 1
is 0 and values on the lower half mirror the upper half.  A jump records the
arc value before it, the value at the point itself and the arc value after
it.  Jump locations are exact rational turns; in *sampled* form a location is
only known up to an isolating interval ``[lo, hi]`` of turns.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from ..errors import ExceptionalPoint, IrrationalJumpAngle
from ..exactnum import UnitCirclePoint

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Jump:
    lo: Fraction
    hi: Fraction
    before: int
    at: Optional[int]  # None where the value at the point is not determined
    after: int

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def point(self) -> UnitCirclePoint:
        if not self.exact:
            raise IrrationalJumpAngle("jump location is irrational")
        return UnitCirclePoint.from_turns(self.lo)


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The rational with smallest denominator strictly inside ``(a, b)``."""
    if not a < b:
        raise ValueError("empty interval")
    q = 1
    while True:
        p = math.floor(a * q) + 1
        if Fraction(p, q) < b:
            return Fraction(p, q)
        q += 1


def to_upper(turns: Fraction) -> Fraction:
    t = Fraction(turns) % 1
    return min(t, 1 - t)


class StepFunction:
    __slots__ = ("jumps",)

    def __init__(self, jumps=()):
        self.jumps = tuple(jumps)

    # -- construction -------------------------------------------------

    @classmethod
    def build(cls, brackets, arc_value: Callable[[Fraction], int],
              point_value: Callable[[Fraction], Optional[int]] | None = None,
              sample_ok: Callable[[Fraction, Fraction, Fraction], bool] | None = None) -> "StepFunction":
        """Evaluate ``arc_value`` once per arc between the given jump brackets.

        ``brackets`` are ``(lo, hi)`` turn intervals inside ``(0, 1/2]``, sorted
        and disjoint; exact jumps have ``lo == hi``.  Arc samples are the
        simplest rationals in each gap; ``sample_ok(s, a, b)`` may reject a
        candidate (the next simplest one is then tried).
        """
        brackets = sorted((Fraction(lo), Fraction(hi)) for lo, hi in brackets)
        edges = [(Fraction(0), Fraction(0))] + brackets
        if not brackets or brackets[-1][1] < HALF:
            edges.append((HALF, HALF))
            tail_is_jump = False
        else:
            tail_is_jump = True
        arc_vals = []
        for (_, a), (b, _) in zip(edges, edges[1:]):
            s = _sample(a, b, sample_ok)
            arc_vals.append(arc_value(s))
        if tail_is_jump:
            arc_vals.append(arc_vals[-1])  # the arc past -1 mirrors the one before it
        jumps = []
        for k, (lo, hi) in enumerate(brackets):
            at = point_value(lo) if (point_value is not None and lo == hi) else None
            jumps.append(Jump(lo, hi, arc_vals[k], at, arc_vals[k + 1]))
        return cls(j for j in jumps if not (j.before == j.after == j.at))

    @classmethod
    def zero(cls) -> "StepFunction":
        return cls()

    # -- queries ------------------------------------------------------

    @property
    def exact(self) -> bool:
        return all(j.exact for j in self.jumps)

    def jump_points(self) -> list[UnitCirclePoint]:
        """Jump locations on the whole circle (both halves)."""
        pts = []
        for j in self.jumps:
            p = j.point
            pts.append(p)
            if p.turns != HALF:
                pts.append(p.conj())
        return sorted(pts, key=lambda p: p.turns)

    def arcs(self) -> list[tuple[Fraction, Fraction, int]]:
        """``(start, end, value)`` for the open arcs of the upper semicircle."""
        out, start, value = [], Fraction(0), 0
        for j in self.jumps:
            if j.lo > start:
                out.append((start, j.lo, j.before))
            start, value = j.hi, j.after
        if start < HALF:
            out.append((start, HALF, value))
        return out

    def value_turns(self, turns) -> int:
        s = to_upper(Fraction(turns))
        if s == 0:
            return 0
        los = [j.lo for j in self.jumps]
        k = bisect_left(los, s)
        if k < len(self.jumps) and self.jumps[k].lo == s and self.jumps[k].exact:
            at = self.jumps[k].at
            if at is None:
                raise ExceptionalPoint(f"value at {s} turns is not determined")
            return at
        if k > 0 and not self.jumps[k - 1].exact and s <= self.jumps[k - 1].hi:
            raise IrrationalJumpAngle(f"{s} turns lies inside an isolating interval")
        if k < len(self.jumps):
            return self.jumps[k].before
        return self.jumps[-1].after if self.jumps else 0

    def __call__(self, w: UnitCirclePoint) -> int:
        return self.value_turns(w.turns)

    def is_zero(self) -> bool:
        return not self.jumps

    def integral(self) -> Fraction:
        """Integral over the circle with total mass 1."""
        if not self.exact:
            raise IrrationalJumpAngle("exact integral needs rational jump angles")
        return 2 * sum(((b - a) * v for a, b, v in self.arcs()), Fraction(0))

    # -- algebra ------------------------------------------------------

    def __neg__(self) -> "StepFunction":
        return StepFunction(Jump(j.lo, j.hi, -j.before, None if j.at is None else -j.at, -j.after)
                            for j in self.jumps)

    def __add__(self, other: "StepFunction") -> "StepFunction":
        if not (self.exact and other.exact):
            raise IrrationalJumpAngle("sum of sampled step functions is not supported")
        pts = sorted({j.lo for j in self.jumps} | {j.lo for j in other.jumps})

        def point_value(s):
            a, b = _safe(self, s), _safe(other, s)
            return None if a is None or b is None else a + b

        return StepFunction.build([(p, p) for p in pts],
                                  lambda s: self.value_turns(s) + other.value_turns(s), point_value)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "StepFunction":
        if k == 0:
            return StepFunction()
        return StepFunction(Jump(j.lo, j.hi, k * j.before, None if j.at is None else k * j.at, k * j.after)
                            for j in self.jumps)

    def pullback(self, r: int) -> "StepFunction":
        """The function ``w -> f(w**r)``.

        At a preimage ``u`` of a jump the value is ``f(u**r)`` when ``u`` has
        prime-power order and is left undetermined otherwise.
        """
        if r < 1:
            raise ValueError("r must be positive")
        if not self.exact:
            raise IrrationalJumpAngle("pullback of a sampled step function is not supported")
        if r == 1:
            return self
        def point_value(s):
            if UnitCirclePoint.from_turns(s).is_prime_power_order():
                return _safe(self, s * r)
            return None

        pts = set()
        for j in self.jumps:
            for s in (j.lo, 1 - j.lo):
                for k in range(r):
                    u = to_upper((s + k) / r)
                    if u:
                        pts.add(u)
        return StepFunction.build([(p, p) for p in sorted(pts)],
                                  lambda s: self.value_turns(s * r), point_value)

    def __eq__(self, other):
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self.jumps == other.jumps

    def __hash__(self):
        return hash(self.jumps)

    def table(self) -> list[tuple[Fraction, Fraction, Optional[int]]]:
        """Rows ``(theta_start/pi, theta_end/pi, value)`` over the full circle [0, 2*pi).

        Jump points appear as degenerate rows with equal endpoints.
        """
        pieces = []  # (start_turn, end_turn, value) on [0, 1]
        for a, b, v in self.arcs():
            if b == HALF:  # -1 is not a jump: one arc through it
                pieces.append((a, 1 - a, v))
            else:
                pieces.append((a, b, v))
                pieces.append((1 - b, 1 - a, v))
        for j in self.jumps:
            if j.exact:
                pieces.append((j.lo, j.lo, j.at))
                if j.lo != HALF:
                    pieces.append((1 - j.lo, 1 - j.lo, j.at))
        pieces.append((Fraction(0), Fraction(0), 0))
        pieces.sort(key=lambda p: (p[0], p[1]))
        return [(2 * a, 2 * b, v) for a, b, v in pieces]

    def __repr__(self):
        body = ", ".join(f"[{j.lo}{'' if j.exact else '..' + str(j.hi)}: {j.before}|{j.at}|{j.after}]"
                         for j in self.jumps)
        return f"StepFunction({body})"


def _safe(f: StepFunction, s):
    try:
        return f.value_turns(s)
    except ExceptionalPoint:
        return None


def _sample(a: Fraction, b: Fraction, ok) -> Fraction:
    s = simplest_between(a, b)
    while ok is not None and not ok(s, a, b):
        # next candidate: simplest point of the right part of the gap
        a = s
        s = simplest_between(a, b)
    return s

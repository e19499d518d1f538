"""Immutable expression trees for knots built from Seifert-matrix atoms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..seifert import SeifertMatrix


@dataclass(frozen=True)
class Atom:
    matrix: SeifertMatrix

    @property
    def name(self) -> str:
        return self.matrix.name or "anonymous"

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Sum:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a connected sum needs at least one summand")

    def __str__(self):
        return "sum(" + ", ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class Mirror:
    knot: "KnotDescriptor"

    def __str__(self):
        return f"mirror({self.knot})"


@dataclass(frozen=True)
class Cable:
    """The (r, 1)-cable of ``knot``."""

    r: int
    knot: "KnotDescriptor"

    def __post_init__(self):
        if int(self.r) < 1:
            raise ValueError("cable parameter must be at least 1")

    def __str__(self):
        return f"cable({self.r}, {self.knot})"


@dataclass(frozen=True)
class Infection:
    """``carrier`` infected along a linking-number-zero curve by ``infected``.

    ``depth`` records the derived-series depth the curve is declared to sit at.
    """

    carrier: "KnotDescriptor"
    depth: int
    infected: "KnotDescriptor"

    def __post_init__(self):
        if int(self.depth) < 0:
            raise ValueError("depth tag must be nonnegative")

    def __str__(self):
        return f"infect({self.carrier}, eta {self.depth}, {self.infected})"


KnotDescriptor = Union[Atom, Sum, Mirror, Cable, Infection]


@dataclass(frozen=True)
class OrderSpec:
    """A positive integer order, or the infinite order (``d is None``)."""

    d: int | None

    def __post_init__(self):
        if self.d is not None and int(self.d) < 1:
            raise ValueError("finite order must be at least 1")

    @property
    def is_infinite(self) -> bool:
        return self.d is None

    @classmethod
    def parse(cls, text) -> "OrderSpec":
        if isinstance(text, OrderSpec):
            return text
        if isinstance(text, int):
            return cls(text)
        s = str(text).strip().lower()
        if s in ("inf", "infinite", "infinity", "oo"):
            return INFINITE
        return cls(int(s))

    def __str__(self):
        return "inf" if self.d is None else str(self.d)


INFINITE = OrderSpec(None)


def depth_of(K: KnotDescriptor) -> int:
    """Nesting depth of infections."""
    if isinstance(K, Atom):
        return 0
    if isinstance(K, Sum):
        return max(depth_of(p) for p in K.parts)
    if isinstance(K, (Mirror, Cable)):
        return depth_of(K.knot)
    return max(depth_of(K.carrier), 1 + depth_of(K.infected))

"""Coefficient ring tags: the integers, the rationals, or Z/p for a prime p."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from flint import fmpz


@dataclass(frozen=True)
class Ring:
    kind: str  # "Z", "Q" or "Zp"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "Zp":
            if self.p < 2 or not fmpz(self.p).is_prime():
                raise ValueError(f"{self.p} is not a prime")
        elif self.p:
            raise ValueError("only Z/p carries a modulus")

    @classmethod
    def integers(cls) -> "Ring":
        return cls("Z")

    @classmethod
    def rationals(cls) -> "Ring":
        return cls("Q")

    @classmethod
    def mod(cls, p: int) -> "Ring":
        return cls("Zp", int(p))

    @classmethod
    def parse(cls, text: str) -> "Ring":
        """Accepts ``z``, ``q``, ``zp`` style tags such as ``z3`` or ``Z_5``."""
        s = text.strip().lower().replace("_", "").replace("/", "")
        if s in ("z", "int", "integers"):
            return cls.integers()
        if s in ("q", "rat", "rationals"):
            return cls.rationals()
        m = re.fullmatch(r"z(\d+)", s)
        if m:
            return cls.mod(int(m.group(1)))
        raise ValueError(f"cannot parse ring tag {text!r}")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "Zp" else 0

    def coerce(self, c):
        """Map an int / Fraction into this ring's canonical Python scalar."""
        if self.kind == "Zp":
            c = Fraction(c)
            return int(c.numerator * pow(c.denominator, -1, self.p) % self.p)
        if self.kind == "Z":
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return int(c)
        return Fraction(c)

    def tag(self) -> str:
        return {"Z": "z", "Q": "q"}.get(self.kind, f"z{self.p}")

    def __str__(self):
        return {"Z": "Z", "Q": "Q"}.get(self.kind, f"Z_{self.p}")


ZZ = Ring.integers()
QQ = Ring.rationals()

"""Family specifications, infection stages and iterated-satellite assembly."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from flint import fmpz

from ..blanchfield import delta_mod_p_nontrivial, generates_module, module_from_seifert
from ..descriptor import Infection, KnotDescriptor, abelian_delta, parse, to_seifert
from ..errors import StageInvalid, UnsupportedNode
from ..exactnum import QQ, LaurentPoly, Ring
from ..seifert import TORUS_QS


def choose_primes(delta: LaurentPoly, count: int) -> list[int]:
    """The ``count`` smallest primes above the largest absolute coefficient of ``delta``."""
    if delta.is_zero():
        raise ValueError("Alexander polynomial must be nonzero")
    bound = max(abs(int(c)) for c in delta.coeffs())
    out, p = [], bound
    while len(out) < count:
        p += 1
        if fmpz(p).is_prime():
            out.append(p)
    return out


def leading_bound(delta: LaurentPoly) -> int:
    """Absolute leading coefficient of the normalized polynomial."""
    return abs(int(delta.normalized().leading_coefficient()))


@dataclass(frozen=True)
class InfectionStage:
    """A slice carrier ``K_k`` with an infection curve of linking number zero.

    ``eta`` is the class of the curve in the carrier's Alexander module, as
    a coordinate vector over the Seifert basis (default: the first basis vector).
    """

    carrier: str
    linking_number: int = 0
    eta: tuple | None = None
    slice_asserted: bool = True

    @property
    def descriptor(self) -> KnotDescriptor:
        return parse(self.carrier)

    def eta_vector(self, size: int) -> list:
        if self.eta is None:
            return [1] + [0] * (size - 1) if size else []
        if len(self.eta) != size:
            raise StageInvalid(f"eta has length {len(self.eta)}, expected {size}")
        return list(self.eta)

    def check(self, primes=(), is_stage_zero: bool = False) -> dict:
        """Per-precondition flags; raises nothing."""
        flags = {"linking_number_zero": self.linking_number == 0, "slice_asserted": bool(self.slice_asserted)}
        try:
            A = to_seifert(self.descriptor)
        except UnsupportedNode:
            flags["generator"] = False
            return flags
        eta = self.eta_vector(A.size)
        rings = [QQ] + ([Ring.mod(primes[0])] if is_stage_zero and primes else [])
        ok = True
        for R in rings:
            mod = module_from_seifert(A, R)
            ok = ok and not mod.is_trivial and generates_module(mod, eta)
        flags["generator"] = ok
        return flags

    def validate(self, primes=(), is_stage_zero: bool = False) -> None:
        flags = self.check(primes, is_stage_zero)
        if not flags["linking_number_zero"]:
            raise StageInvalid(f"stage carrier {self.carrier}: linking number {self.linking_number} is not 0")
        if not flags["slice_asserted"]:
            raise StageInvalid(f"stage carrier {self.carrier} is not asserted slice")
        if not flags["generator"]:
            raise StageInvalid(f"stage carrier {self.carrier}: the infection curve does not generate a "
                               f"nontrivial Alexander module")

    def to_json(self) -> dict:
        doc = {"carrier": self.carrier, "linking_number": self.linking_number, "slice": self.slice_asserted}
        if self.eta is not None:
            doc["eta"] = list(self.eta)
        return doc

    @classmethod
    def from_json(cls, doc) -> "InfectionStage":
        if isinstance(doc, str):
            return cls(doc)
        eta = doc.get("eta")
        return cls(doc["carrier"], int(doc.get("linking_number", 0)),
                   tuple(eta) if eta is not None else None, bool(doc.get("slice", True)))


DEFAULT_POOL = tuple(f"T2_{q}" for q in TORUS_QS)


@dataclass(frozen=True)
class FamilySpec:
    depth: int
    primes: tuple
    bound: Fraction
    stages: tuple
    pool: tuple = DEFAULT_POOL
    max_cable: int = 10

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(int(p) for p in self.primes))
        object.__setattr__(self, "bound", Fraction(self.bound))
        object.__setattr__(self, "stages", tuple(
            s if isinstance(s, InfectionStage) else InfectionStage.from_json(s) for s in self.stages))
        object.__setattr__(self, "pool", tuple(self.pool))
        if self.depth < 1:
            raise ValueError("depth n must be at least 1")
        if self.bound <= 0:
            raise ValueError("the Cheeger-Gromov bound L must be positive")
        if not self.primes:
            raise ValueError("at least one prime is needed")
        if any(not fmpz(p).is_prime() for p in self.primes):
            raise ValueError(f"not all of {self.primes} are prime")
        if any(a >= b for a, b in zip(self.primes, self.primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if len(self.stages) != self.depth:
            raise ValueError(f"expected {self.depth} stages, got {len(self.stages)}")
        if self.max_cable < 1:
            raise ValueError("max_cable must be at least 1")

    @property
    def size(self) -> int:
        """Number of knots in the family (one per prime)."""
        return len(self.primes)

    @property
    def target(self) -> Fraction:
        return self.depth * self.bound

    def carrier_delta(self) -> LaurentPoly:
        return abelian_delta(self.stages[0].descriptor)

    def validate(self) -> None:
        """Stage preconditions and the prime condition on the stage-zero carrier."""
        delta = self.carrier_delta()
        top = leading_bound(delta)
        for p in self.primes:
            if p <= top:
                raise StageInvalid(f"prime {p} does not exceed the leading coefficient {top} of {delta}")
            if not delta_mod_p_nontrivial(delta, p):
                raise StageInvalid(f"Alexander polynomial {delta} becomes a unit mod {p}")
        for k, stage in enumerate(self.stages):
            stage.validate(self.primes, is_stage_zero=(k == 0))

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "primes": list(self.primes),
            "cheeger_gromov_bound": str(self.bound),
            "stages": [s.to_json() for s in self.stages],
            "pool": list(self.pool),
            "max_cable": self.max_cable,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FamilySpec":
        depth = int(doc["depth"])
        stages = doc.get("stages")
        if stages is None:
            raise ValueError("family spec needs 'stages'")
        primes = doc.get("primes")
        if isinstance(primes, dict) or primes is None:  # {"count": m}: choose automatically
            count = int((primes or {}).get("count", 1))
            primes = choose_primes(abelian_delta(InfectionStage.from_json(stages[0]).descriptor), count)
        return cls(depth, tuple(primes), Fraction(str(doc["cheeger_gromov_bound"])), tuple(stages),
                   tuple(doc.get("pool", DEFAULT_POOL)), int(doc.get("max_cable", 10)))

    @classmethod
    def load(cls, path) -> "FamilySpec":
        return cls.from_json(json.loads(Path(path).read_text()))


def assemble_iterated(J0: KnotDescriptor, stages) -> KnotDescriptor:
    """``J_{k+1} = K_k(eta_k, J_k)``; the node of stage ``k`` carries depth tag ``k``."""
    J = J0
    for k, stage in enumerate(stages):
        stage.validate()
        J = Infection(stage.descriptor, k, J)
    return J


def curve_depths(J: KnotDescriptor) -> dict[int, int]:
    """Derived-series depth of each infection curve in the outermost knot.

    Along the chain of nested infections, the curve tagged ``k`` of an
    ``n``-fold iterated satellite lies at depth ``n - k``.
    """
    tags = []
    node = J
    while isinstance(node, Infection):
        tags.append(node.depth)
        node = node.infected
    n = len(tags)
    return {tag: n - tag for tag in tags}

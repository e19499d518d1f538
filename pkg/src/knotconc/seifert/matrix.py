"""Seifert matrices, the built-in catalog and the JSON document format."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from flint import fmpz_mat

from ..errors import InvalidSeifertMatrix


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidSeifertMatrix("Seifert matrix must be square")
        if n % 2:
            raise InvalidSeifertMatrix(f"Seifert matrix has odd size {n}")
        d = self.antisymmetrization_det()
        if d not in (1, -1):
            raise InvalidSeifertMatrix(f"det(A - A^T) = {d}, expected +-1")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return self.size // 2

    def antisymmetrization_det(self) -> int:
        n = self.size
        if n == 0:
            return 1
        A = self.entries
        return int(fmpz_mat([[A[i][j] - A[j][i] for j in range(n)] for i in range(n)]).det())

    def transpose(self) -> tuple:
        return tuple(zip(*self.entries)) if self.entries else ()

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> dict:
        doc = {"matrix": [list(r) for r in self.entries]}
        if self.name:
            doc = {"name": self.name, **doc}
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "SeifertMatrix":
        if "matrix" not in doc:
            raise InvalidSeifertMatrix("Seifert document needs a 'matrix' field")
        return cls(tuple(tuple(r) for r in doc["matrix"]), doc.get("name"))

    @classmethod
    def load(cls, path) -> "SeifertMatrix":
        return cls.from_json(json.loads(Path(path).read_text()))

    def __str__(self):
        return self.name or f"SeifertMatrix({[list(r) for r in self.entries]})"


def connected_sum(A: SeifertMatrix, B: SeifertMatrix) -> SeifertMatrix:
    n, m = A.size, B.size
    rows = [list(r) + [0] * m for r in A.entries]
    rows += [[0] * n + list(r) for r in B.entries]
    name = f"{A.name}#{B.name}" if A.name and B.name else None
    return SeifertMatrix(tuple(map(tuple, rows)), name)


def mirror(A: SeifertMatrix) -> SeifertMatrix:
    """Seifert matrix ``-A^T`` of the mirror image (the concordance inverse)."""
    rows = tuple(tuple(-x for x in col) for col in A.transpose())
    return SeifertMatrix(rows, f"mirror({A.name})" if A.name else None)


# -- catalog --------------------------------------------------------------


def torus_2q(q: int) -> SeifertMatrix:
    """Standard Seifert matrix of the torus knot T(2, q), q odd: -1 on the diagonal, 1 above."""
    if q % 2 == 0 or q < 1:
        raise ValueError("T(2,q) is a knot only for odd q")
    n = q - 1
    rows = tuple(tuple(-1 if i == j else (1 if j == i + 1 else 0) for j in range(n)) for i in range(n))
    return SeifertMatrix(rows, "unknot" if q == 1 else f"T2_{q}")


def twist(n: int) -> SeifertMatrix:
    """Genus-one twist knot with Seifert matrix [[-1, 1], [0, n]]."""
    return SeifertMatrix(((-1, 1), (0, n)), f"twist_{n}")


UNKNOT = SeifertMatrix((), "unknot")
TREFOIL = SeifertMatrix(((-1, 1), (0, -1)), "trefoil")
FIGURE_EIGHT = SeifertMatrix(((1, 1), (0, -1)), "figure8")
STEVEDORE = SeifertMatrix(((-1, 1), (0, 2)), "stevedore")

# Metabolic genus-two form [[0, P], [Q, R]] with det(tP - Q^T) = t^2 - t + 1, so the
# Alexander polynomial is (t^2 - t + 1)^2; the Alexander module is cyclic.
METABOLIC_31 = SeifertMatrix(
    ((0, 0, 1, -1),
     (0, 0, 1, 0),
     (0, 1, 0, 1),
     (-1, -1, 0, 0)),
    "metabolic_31",
)

TORUS_QS = tuple(range(3, 23, 2))

_ALIASES = {"trefoil": "T2_3", "cinquefoil": "T2_5", "figure_eight": "figure8",
            "4_1": "figure8", "3_1": "T2_3", "5_1": "T2_5", "6_1": "stevedore", "5_2": "twist_-2"}


def _build_catalog() -> dict:
    cat = {"unknot": UNKNOT, "figure8": FIGURE_EIGHT, "stevedore": STEVEDORE, "metabolic_31": METABOLIC_31}
    for q in TORUS_QS:
        cat[f"T2_{q}"] = torus_2q(q)
    return cat


CATALOG = _build_catalog()

# knots whose Alexander roots on the circle are all roots of unity
EXACT_CATALOG = ("unknot", "figure8", "metabolic_31") + tuple(f"T2_{q}" for q in TORUS_QS)

# the acceptance-suite core: T(2,q) for q <= 11 and the figure-eight knot
CORE_CATALOG = ("T2_3", "T2_5", "T2_7", "T2_9", "T2_11", "figure8")


def lookup(name: str) -> SeifertMatrix:
    """Resolve a catalog name; ``twist_<n>`` and ``T2_<q>`` are generated on demand."""
    key = _ALIASES.get(name, name)
    if key in CATALOG:
        m = CATALOG[key]
        return m if name == key else SeifertMatrix(m.entries, name)
    if m := re.fullmatch(r"twist_(-?\d+)", key):
        return twist(int(m.group(1)))
    if m := re.fullmatch(r"T2_(\d+)", key):
        return torus_2q(int(m.group(1)))
    raise KeyError(f"unknown catalog knot {name!r}")

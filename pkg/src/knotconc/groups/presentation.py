"""Finitely presented groups, abelian quotients and Fox calculus."""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path

from ..blanchfield import AlexanderModule, module_from_matrix
from ..errors import NonCyclicAbelianization, UnsupportedDepth
from ..exactnum import LaurentPoly, Ring
from ..exactnum.smith import INTEGERS, diagonal, smith

Word = tuple  # letters are signed 1-based generator indices


def free_reduce(word) -> Word:
    out = []
    for x in word:
        x = int(x)
        if x == 0:
            raise ValueError("generator indices are 1-based")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(word) -> Word:
    return tuple(-x for x in reversed(word))


def word_from_letters(text: str) -> Word:
    """``"abAB"`` -> (1, 2, -1, -2); uppercase letters are inverses."""
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if not ch.isalpha():
            raise ValueError(f"bad letter {ch!r} in word")
        k = ord(ch.lower()) - ord("a") + 1
        out.append(-k if ch.isupper() else k)
    return tuple(out)


def word_to_letters(word) -> str:
    return " ".join(chr(ord("a") + abs(x) - 1).upper() if x < 0 else chr(ord("a") + x - 1) for x in word)


@dataclass(frozen=True)
class GroupPresentation:
    ngens: int
    relators: tuple

    def __post_init__(self):
        rels = tuple(free_reduce(r) for r in self.relators)
        for r in rels:
            if any(abs(x) > self.ngens for x in r):
                raise ValueError(f"relator {r} uses a generator beyond {self.ngens}")
        object.__setattr__(self, "relators", rels)

    @classmethod
    def parse(cls, text: str) -> "GroupPresentation":
        """``gens: 2; rel: a b a B A B; rel: ...``"""
        n, rels = None, []
        for clause in filter(None, (c.strip() for c in re.split(r"[;\n]", text))):
            key, _, body = clause.partition(":")
            key = key.strip().lower()
            if key in ("gens", "generators"):
                n = int(body)
            elif key in ("rel", "rels", "relator"):
                rels += [word_from_letters(w) for w in body.split(",")] if "," in body else [word_from_letters(body)]
            else:
                raise ValueError(f"unknown clause {clause!r}")
        if n is None:
            raise ValueError("presentation needs a 'gens: n' clause")
        return cls(n, tuple(rels))

    @classmethod
    def from_json(cls, doc: dict) -> "GroupPresentation":
        return cls(int(doc["gens"]), tuple(tuple(r) for r in doc.get("relators", ())))

    @classmethod
    def load(cls, path) -> "GroupPresentation":
        text = Path(path).read_text()
        if text.lstrip().startswith("{"):
            return cls.from_json(json.loads(text))
        return cls.parse(text)

    def to_json(self) -> dict:
        return {"gens": self.ngens, "relators": [list(r) for r in self.relators]}

    def __str__(self):
        return f"gens: {self.ngens}" + "".join(f"; rel: {word_to_letters(r)}" for r in self.relators)

    def relation_matrix(self) -> list[list[int]]:
        """Exponent sums, one row per relator."""
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows


TREFOIL_GROUP = GroupPresentation(2, (word_from_letters("abaBAB"),))
FIGURE_EIGHT_GROUP = GroupPresentation(2, (word_from_letters("aBabABaBAb"),))
UNKNOT_GROUP = GroupPresentation(1, ())


# -- abelian quotients ---------------------------------------------------


@dataclass(frozen=True)
class AbelianQuotientData:
    """``Z^free_rank + sum Z/torsion_i`` with the image of each generator.

    An image is a tuple: ``free_rank`` integers followed by one residue per
    torsion coefficient.
    """

    free_rank: int
    torsion: tuple
    images: tuple = ()

    def is_infinite_cyclic(self) -> bool:
        return self.free_rank == 1 and not self.torsion

    def order(self):
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion),
                "images": [list(v) for v in self.images]}

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def abelianization(P: GroupPresentation) -> AbelianQuotientData:
    n = P.ngens
    M = P.relation_matrix()
    if not M or n == 0:
        return AbelianQuotientData(n, (), tuple(tuple(int(i == j) for i in range(n)) for j in range(n)))
    _, _, D, R, _ = smith(M, INTEGERS)
    d = diagonal(D) + [0] * (n - min(len(M), n))
    torsion_idx = [i for i, x in enumerate(d) if x > 1]
    free_idx = [i for i, x in enumerate(d) if x == 0]
    images = []
    for j in range(n):
        row = R[j]  # image of e_j in the new basis
        images.append(tuple(row[i] for i in free_idx) + tuple(row[i] % d[i] for i in torsion_idx))
    return AbelianQuotientData(len(free_idx), tuple(d[i] for i in torsion_idx), tuple(images))


def p1_quotient(P: GroupPresentation, ring: Ring) -> AbelianQuotientData:
    """First quotient of the mixed series: the abelianization tensored with ``ring`` (its image)."""
    H = abelianization(P)
    if ring.kind == "Z":
        return H
    if ring.kind == "Q":
        return AbelianQuotientData(H.free_rank, (), tuple(v[:H.free_rank] for v in H.images))
    p = ring.p
    keep = [k for k, t in enumerate(H.torsion) if t % p == 0]
    rank = H.free_rank + len(keep)
    images = tuple(tuple(x % p for x in v[:H.free_rank]) + tuple(v[H.free_rank + k] % p for k in keep)
                   for v in H.images)
    return AbelianQuotientData(0, (p,) * rank, images)


# -- Fox calculus ----------------------------------------------------------


class GroupRingElement:
    """Finite Z-linear combination of freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, w, c: int = 1) -> "GroupRingElement":
        return cls({free_reduce(w): c})

    def __add__(self, other):
        out = defaultdict(int, self.terms)
        for w, c in other.terms.items():
            out[w] += c
        return GroupRingElement(out)

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = defaultdict(int)
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                out[free_reduce(u + v)] += a * b
        return GroupRingElement(out)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def map_to_laurent(self, ring: Ring, exponents) -> LaurentPoly:
        """Image under ``g_i -> t^exponents[i-1]``."""
        out = defaultdict(int)
        for w, c in self.terms.items():
            e = sum(exponents[abs(x) - 1] * (1 if x > 0 else -1) for x in w)
            out[e] += c
        return LaurentPoly.from_dict(ring, dict(out))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            mono = word_to_letters(w).replace(" ", "")
            body = str(abs(c)) if not mono else (mono if abs(c) == 1 else f"{abs(c)}*{mono}")
            parts.append(("-" if c < 0 else "+") + " " + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+") else "-" + out[2:]


def fox_derivative(word, g: int) -> GroupRingElement:
    """``d word / d g_g`` by the prefix rule."""
    terms = defaultdict(int)
    prefix: list[int] = []
    for x in word:
        if x == g:
            terms[free_reduce(prefix)] += 1
        elif x == -g:
            terms[free_reduce(prefix + [x])] -= 1
        prefix.append(x)
    return GroupRingElement(terms)


def alexander_from_presentation(P: GroupPresentation, ring: Ring) -> AlexanderModule:
    """Alexander module over ``ring[t^±1]`` from the Fox Jacobian.

    Rows are generators and columns relators; the row of one generator
    mapping to ``t^±1`` is deleted.
    """
    H = abelianization(P)
    if not H.is_infinite_cyclic():
        raise NonCyclicAbelianization(f"abelianization is {H}, not Z")
    exps = [v[0] for v in H.images]
    drop = next((i for i, e in enumerate(exps) if abs(e) == 1), None)
    if drop is None:
        raise ValueError("no generator maps to a generator of Z")
    if exps[drop] == -1:
        exps = [-e for e in exps]
    rows = []
    for g in range(1, P.ngens + 1):
        if g - 1 == drop:
            continue
        rows.append([fox_derivative(r, g).map_to_laurent(ring, exps) for r in P.relators])
    return module_from_matrix(rows, ring)


def p2_quotient(P: GroupPresentation, coefficients) -> AlexanderModule:
    """Second mixed-series quotient, available when the first one is Z.

    With ``R_0`` in {Z, Q} and a knot-like group, the second quotient is
    the Alexander module over ``R_1[t^±1]``.
    """
    r0, r1 = coefficients[0], coefficients[1]
    if r0.kind == "Zp" or not p1_quotient(P, r0).is_infinite_cyclic():
        raise UnsupportedDepth("depth-2 quotients are only computed when the first quotient is Z")
    if not r1.is_field:
        raise UnsupportedDepth("depth-2 quotients need field coefficients for the second ring")
    return alexander_from_presentation(P, r1)

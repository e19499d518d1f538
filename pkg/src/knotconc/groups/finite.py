"""Small finite groups by multiplication table, and the mixed commutator series on them."""

from __future__ import annotations

from ..exactnum import Ring


class FiniteGroup:
    """Elements are indices ``0..n-1``; ``mul[a][b]`` is the index of ``a*b``."""

    def __init__(self, mul, identity: int = 0, name: str = "G", labels=None):
        self.mul = [list(r) for r in mul]
        self.n = len(self.mul)
        if self.n > 10_000:
            raise ValueError("finite oracle groups are limited to 10^4 elements")
        self.e = identity
        self.name = name
        self.labels = list(labels) if labels is not None else list(range(self.n))
        self.inv = [next(b for b in range(self.n) if self.mul[a][b] == identity) for a in range(self.n)]

    @classmethod
    def from_generators(cls, gens, op, identity, name="G") -> "FiniteGroup":
        """Close ``gens`` under the binary operation ``op`` (elements must be hashable)."""
        elems, index = [identity], {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = op(x, g)
                    if y not in index:
                        index[y] = len(elems)
                        elems.append(y)
                        nxt.append(y)
            frontier = nxt
        mul = [[index[op(a, b)] for b in elems] for a in elems]
        return cls(mul, 0, name, elems)

    @property
    def whole(self) -> frozenset:
        return frozenset(range(self.n))

    def power(self, a: int, k: int) -> int:
        out = self.e
        for _ in range(k):
            out = self.mul[out][a]
        return out

    def commutator(self, a: int, b: int) -> int:
        m, inv = self.mul, self.inv
        return m[m[m[inv[a]][inv[b]]][a]][b]

    def generated(self, elems) -> frozenset:
        """Subgroup generated by ``elems``."""
        sub = {self.e}
        frontier = [self.e]
        gens = list(set(elems))
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul[x][g]
                    if y not in sub:
                        sub.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(sub)

    def commutator_subgroup(self, S) -> frozenset:
        S = list(S)
        return self.generated(self.commutator(a, b) for a in S for b in S)

    def derived_series(self, length: int) -> list[frozenset]:
        out = [self.whole]
        for _ in range(length):
            out.append(self.commutator_subgroup(out[-1]))
        return out

    def __len__(self):
        return self.n


def _compose(p, q):
    """Permutation ``p`` after ``q``."""
    return tuple(p[i] for i in q)


def _perm_group(gens, name) -> FiniteGroup:
    n = len(gens[0])
    return FiniteGroup.from_generators([tuple(g) for g in gens], _compose, tuple(range(n)), name)


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return _perm_group([(0,)], "S1")
    cycle = tuple(list(range(1, n)) + [0])
    swap = tuple([1, 0] + list(range(2, n)))
    return _perm_group([cycle, swap], f"S{n}")


def alternating(n: int) -> FiniteGroup:
    gens = []
    for i in range(n - 2):  # 3-cycles (0 1 i+2) generate A_n
        p = list(range(n))
        p[0], p[1], p[i + 2] = 1, i + 2, 0
        gens.append(tuple(p))
    return _perm_group(gens or [tuple(range(n))], f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return _perm_group([rot, ref], f"D{n}")


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], 0, f"Z/{n}")


def quaternion() -> FiniteGroup:
    """Q8 as unit quaternions (w, x, y, z) with integer entries."""
    def qmul(a, b):
        w1, x1, y1, z1 = a
        w2, x2, y2, z2 = b
        return (w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
                w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2)

    return FiniteGroup.from_generators([(0, 1, 0, 0), (0, 0, 1, 0)], qmul, (1, 0, 0, 0), "Q8")


def oracle_groups() -> dict[str, FiniteGroup]:
    return {"S3": symmetric(3), "D4": dihedral(4), "A4": alternating(4), "Q8": quaternion(), "S4": symmetric(4)}


# -- mixed series ----------------------------------------------------------


def _next_term(G: FiniteGroup, S: frozenset, ring: Ring) -> frozenset:
    """Kernel of ``S -> S/[S,S] -> (S/[S,S]) (x) ring`` for a finite subgroup ``S``."""
    C = G.commutator_subgroup(S)
    if ring.kind == "Z":
        return C  # A (x) Z = A
    if ring.kind == "Q":
        return S  # a finite abelian group dies after tensoring with Q
    p = ring.p
    # a (x) 1 vanishes in A/pA exactly when a is a p-th multiple
    pth = {G.power(b, p) for b in S}
    coset_reps = {G.mul[x][c] for x in pth for c in C}
    return frozenset(s for s in S if s in coset_reps)


def mixed_series_finite_oracle(G: FiniteGroup, coefficients) -> list[frozenset]:
    """``[G, P^1 G, P^2 G, ...]`` for the ring sequence ``coefficients``.

    Trailing repeats are dropped once the series has stabilized.
    """
    coefficients = [Ring.parse(c) if isinstance(c, str) else c for c in coefficients]
    if not coefficients:
        raise ValueError("coefficient sequence must be non-empty")
    series = [G.whole]
    for ring in coefficients:
        series.append(_next_term(G, series[-1], ring))
    while len(series) > 1 and series[-1] == series[-2]:
        series.pop()
    return series


def label_set(G: FiniteGroup, S) -> list:
    return sorted((G.labels[i] for i in S), key=repr)


__all__ = ["FiniteGroup", "symmetric", "alternating", "dihedral", "cyclic", "quaternion", "oracle_groups",
           "mixed_series_finite_oracle", "label_set"]


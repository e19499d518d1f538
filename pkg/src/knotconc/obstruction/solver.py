"""Exact search for family knots satisfying the point, Arf and integral conditions.

For the i-th prime p every pool element ``a`` is paired with its ``(p, 1)``-cable
as ``J_a = a # -cable(p, a)``.  Its signature integral vanishes, and at
``p``-th roots of unity ``sigma_{J_a} = sigma_a`` because the cable term
evaluates at 1.  The signature values of the ``J_a`` at the constraint
points form an integer matrix.  The search tries, in pool order, single
elements, then pairs, then an exact nullspace vector, taking the first
combination that meets every zero constraint with a nonzero value at ``w_i``.  An even number of copies makes the value exceed
``n L`` and kills the Arf invariant.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path

from flint import fmpz_mat

from ..descriptor import (Cable, KnotDescriptor, Mirror, Sum, arf_eval, parse, render, sigma_eval,
                          signature_step)
from ..errors import Infeasible
from ..exactnum import UnitCirclePoint
from .family import FamilySpec, assemble_iterated


def constraint_points(primes, i: int) -> list[UnitCirclePoint]:
    """``w_j^r`` for ``j <= i`` and ``0 <= r < p_j`` (the 0-based index ``i``)."""
    return [UnitCirclePoint(primes[j], r) for j in range(i + 1) for r in range(primes[j])]


def _zero_points(primes, i: int) -> list[UnitCirclePoint]:
    """Points where the i-th knot must vanish, one per conjugate pair."""
    pts = []
    for j in range(i):
        p = primes[j]
        pts += [UnitCirclePoint(p, r) for r in range(1, p // 2 + 1)]
    p = primes[i]
    pts += [UnitCirclePoint(p, r) for r in range(2, p // 2 + 1)]
    return pts


def pool_elements(spec: FamilySpec) -> list[KnotDescriptor]:
    out = []
    for name in spec.pool:
        base = parse(name)
        out.append(base)
        out += [Cable(r, base) for r in range(2, spec.max_cable + 1)]
    return out


def paired(a: KnotDescriptor, p: int) -> KnotDescriptor:
    return Sum((a, Mirror(Cable(p, a))))


def _combination(cands, coeffs) -> KnotDescriptor:
    parts = []
    for J, c in zip(cands, coeffs):
        if c:
            parts += [J if c > 0 else Mirror(J)] * abs(c)
    return parts[0] if len(parts) == 1 else Sum(tuple(parts))


def _search(cands, zero_pts, w) -> tuple[list[int], list[str]]:
    """Integer coefficients meeting the zero constraints with nonzero value at ``w``."""
    V = [[sigma_eval(J, u) for u in zero_pts] for J in cands]
    s = [sigma_eval(J, w) for J in cands]
    for k, J in enumerate(cands):
        if s[k] and not any(V[k]):
            return [int(i == k) for i in range(len(cands))], []
    # pairs with proportional constraint rows, in pool order
    for k in range(len(cands)):
        m = next((r for r, v in enumerate(V[k]) if v), None)
        if m is None:
            continue
        for l in range(k + 1, len(cands)):
            if not V[l][m]:
                continue
            g = gcd(V[l][m], V[k][m])
            ck, cl = V[l][m] // g, -V[k][m] // g
            if ck * s[k] + cl * s[l] and all(ck * a + cl * b == 0 for a, b in zip(V[k], V[l])):
                return [ck if i == k else cl if i == l else 0 for i in range(len(cands))], []
    if zero_pts:
        # exact integer nullspace of the constraint matrix (rows: points, columns: pool)
        M = fmpz_mat(len(zero_pts), len(cands), [V[k][r] for r in range(len(zero_pts)) for k in range(len(cands))])
        basis, nullity = M.nullspace()
        for col in range(nullity):
            vec = [int(basis[k, col]) for k in range(len(cands))]
            if sum(c * x for c, x in zip(vec, s)):
                g = gcd(*vec)
                return [c // g for c in vec], []
    if not any(s):
        return [], [f"sigma at {w} vanishes for every pool element"]
    k = next(k for k in range(len(cands)) if s[k])
    bad = [f"sigma at {u} = {v} (must be 0)" for u, v in zip(zero_pts, V[k]) if v]
    return [], bad


@dataclass
class FamilyCertificate:
    """Solved family knots with every evaluated value and condition flag."""

    primes: list
    depth: int
    bound: Fraction
    knots: list  # J^i_0 as descriptor strings
    iterated: list  # J^i_n as descriptor strings
    values: list  # per knot: {"r/q": sigma} over the constraint points
    arf: list
    integral: list
    flags: list  # per knot: {"C1": bool, "C2": bool, "C3": bool}
    leading_sum: int = 0  # sum_{r < p_1} sigma_{J^1_0}(w_1^r)
    margin: Fraction = Fraction(0)
    assumptions: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "primes": list(self.primes),
            "depth": self.depth,
            "cheeger_gromov_bound": str(self.bound),
            "knots": list(self.knots),
            "iterated": list(self.iterated),
            "values": [dict(v) for v in self.values],
            "arf": list(self.arf),
            "integral": [str(x) for x in self.integral],
            "flags": [dict(f) for f in self.flags],
            "leading_sum": self.leading_sum,
            "margin": str(self.margin),
            "assumptions": list(self.assumptions),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FamilyCertificate":
        return cls(
            primes=[int(p) for p in doc["primes"]],
            depth=int(doc["depth"]),
            bound=Fraction(str(doc["cheeger_gromov_bound"])),
            knots=list(doc["knots"]),
            iterated=list(doc.get("iterated", [])),
            values=[{k: int(v) for k, v in d.items()} for d in doc["values"]],
            arf=[int(a) for a in doc["arf"]],
            integral=[Fraction(str(x)) for x in doc["integral"]],
            flags=[{k: bool(v) for k, v in f.items()} for f in doc["flags"]],
            leading_sum=int(doc["leading_sum"]),
            margin=Fraction(str(doc["margin"])),
            assumptions=list(doc.get("assumptions", [])),
        )

    def save(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")

    @classmethod
    def load(cls, path) -> "FamilyCertificate":
        return cls.from_json(json.loads(Path(path).read_text()))


def _evaluate(J: KnotDescriptor, primes, i: int, target: Fraction) -> dict:
    """Every value and flag the conditions need for the i-th knot."""
    pts = constraint_points(primes, i)
    values = {str(u): sigma_eval(J, u) for u in pts}
    p = primes[i]
    w, wbar = UnitCirclePoint(p, 1), UnitCirclePoint(p, -1)
    points_ok = (values[str(w)] == values[str(wbar)] > 0
                 and all(values[str(UnitCirclePoint(p, r))] == 0 for r in range(p) if r % p not in (1, p - 1)))
    c1 = points_ok and values[str(w)] > target
    c2 = all(values[str(UnitCirclePoint(primes[j], r))] == 0 for j in range(i) for r in range(primes[j]))
    arf = arf_eval(J)
    integral = signature_step(J).integral()
    return {"values": values, "arf": arf, "integral": integral, "points_ok": bool(points_ok),
            "flags": {"C1": bool(c1), "C2": bool(c2), "C3": arf == 0 and integral == 0}}


def _leading_sum(J: KnotDescriptor, p: int) -> int:
    return sum(sigma_eval(J, UnitCirclePoint(p, r)) for r in range(p))


def solve_family(spec: FamilySpec) -> FamilyCertificate:
    """Build ``J^1_0, ..., J^m_0`` (one per prime) meeting conditions C1-C3 exactly."""
    spec.validate()
    primes, target = spec.primes, spec.target
    pool = pool_elements(spec)
    knots, evals = [], []
    for i, p in enumerate(primes):
        cands = [paired(a, p) for a in pool]
        w = UnitCirclePoint(p, 1)
        coeffs, violated = _search(cands, _zero_points(primes, i), w)
        if not coeffs:
            raise Infeasible(f"no combination of the pool works for p = {p}", violated)
        base = _combination(cands, coeffs)
        s = sigma_eval(base, w)
        if s < 0:
            base, s = Mirror(base), -s
        copies = 2
        while copies * s <= target:
            copies += 2
        J = Sum((base,) * copies)
        knots.append(J)
        evals.append(_evaluate(J, primes, i, target))
    iterated = [render(assemble_iterated(J, spec.stages)) for J in knots]
    lead = _leading_sum(knots[0], primes[0])
    return FamilyCertificate(
        primes=list(primes), depth=spec.depth, bound=spec.bound,
        knots=[render(J) for J in knots], iterated=iterated,
        values=[e["values"] for e in evals], arf=[e["arf"] for e in evals],
        integral=[e["integral"] for e in evals], flags=[e["flags"] for e in evals],
        leading_sum=lead, margin=lead - target,
        assumptions=[f"carrier {s.carrier} is slice" for s in spec.stages],
    )


@dataclass
class VerificationReport:
    ok: bool
    checks: list  # (name, passed, detail)

    @property
    def failures(self) -> list:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks]}

    def __bool__(self):
        return self.ok


# checks whose outcome depends on the bound L; everything else is L-independent
BOUND_DEPENDENT = ("bound", "margin")


def bound_dependent(name: str) -> bool:
    return name in BOUND_DEPENDENT or name.endswith(" C1") or name.endswith("stored C1")


def verify_family(cert: FamilyCertificate, spec: FamilySpec) -> VerificationReport:
    """Recompute every condition and stored value from the descriptors alone."""
    checks = []

    def check(name, passed, detail=""):
        checks.append((name, bool(passed), detail))

    try:
        spec.validate()
        check("stages", True)
    except Exception as exc:
        check("stages", False, str(exc))
    check("primes", list(cert.primes) == list(spec.primes), f"{cert.primes} vs {list(spec.primes)}")
    check("depth", cert.depth == spec.depth)
    check("bound", cert.bound == spec.bound)
    target = spec.target
    n = min(len(cert.knots), spec.size)
    check("family size", len(cert.knots) == spec.size)
    for i in range(n):
        label = f"J^{i + 1}"
        J = parse(cert.knots[i])
        fresh = _evaluate(J, spec.primes, i, target)
        check(f"{label} C1 points", fresh["points_ok"])
        for cond in ("C1", "C2", "C3"):
            check(f"{label} {cond}", fresh["flags"][cond])
            stored = cert.flags[i].get(cond) if i < len(cert.flags) else None
            check(f"{label} stored {cond}", stored == fresh["flags"][cond], f"stored {stored}")
        stored_vals = cert.values[i] if i < len(cert.values) else {}
        for key, v in fresh["values"].items():
            check(f"{label} sigma at {key}", stored_vals.get(key) == v, f"stored {stored_vals.get(key)}, recomputed {v}")
        extra = set(stored_vals) - set(fresh["values"])
        check(f"{label} value keys", not extra, f"unexpected points {sorted(extra)}")
        check(f"{label} Arf", i < len(cert.arf) and cert.arf[i] == fresh["arf"])
        check(f"{label} integral", i < len(cert.integral) and cert.integral[i] == fresh["integral"])
        if i < len(cert.iterated):
            expected = render(assemble_iterated(J, spec.stages))
            check(f"{label} iterated", cert.iterated[i] == expected)
    if cert.knots:
        lead = _leading_sum(parse(cert.knots[0]), spec.primes[0])
        check("leading sum", cert.leading_sum == lead, f"stored {cert.leading_sum}, recomputed {lead}")
        check("margin", cert.margin == lead - target, f"stored {cert.margin}, recomputed {lead - target}")
    return VerificationReport(all(ok for _, ok, _ in checks), checks)

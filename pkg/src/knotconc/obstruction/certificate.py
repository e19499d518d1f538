"""Non-solvability certificate for linear combinations of family knots.

For ``#_i a_i J^i_n`` the first nonzero coefficient picks the knot whose
prime drives the rho-invariant ledger.  With multiplier C = 1 (the weakest
case of C >= 1), the combination is obstructed once
``sum_{r < p} sigma_J(w^r)`` exceeds ``n L``: no sum of ``n`` terms each
bounded by ``L`` in absolute value can cancel it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..descriptor import parse, sigma_eval
from ..errors import MarginViolated
from ..exactnum import UnitCirclePoint
from .family import FamilySpec
from .solver import FamilyCertificate, bound_dependent, verify_family


@dataclass
class NonsolvabilityReport:
    status: str
    coefficients: list
    index: int  # 1-based index of the leading knot
    prime: int
    sigma_sum: int
    bound: Fraction  # n * L
    margin: Fraction
    mirrored: bool

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "coefficients": self.coefficients,
            "leading_index": self.index,
            "prime": self.prime,
            "sigma_sum": self.sigma_sum,
            "n_times_L": str(self.bound),
            "margin": str(self.margin),
            "mirrored": self.mirrored,
            "multiplier": 1,
        }


def nonsolvability_certificate(cert: FamilyCertificate, spec: FamilySpec, coefficients) -> NonsolvabilityReport:
    """PASS report for ``#_i a_i J^i_n``, or :class:`MarginViolated`.

    The certificate is re-verified first.  Failures of checks that do not
    involve the bound ``L`` reject it with ``ValueError``; the ones that do
    (C1's inequality, the stored bound and margin) are subsumed by the
    margin computed here against the spec's ``n L``.
    """
    a = [int(x) for x in coefficients]
    if len(a) > len(cert.knots):
        raise ValueError(f"{len(a)} coefficients for a family of {len(cert.knots)} knots")
    if not any(a):
        raise ValueError("at least one coefficient must be nonzero")
    report = verify_family(cert, spec)
    hard = [n for n, _ in report.failures if not bound_dependent(n)]
    if hard:
        names = ", ".join(hard[:5])
        raise ValueError(f"certificate does not verify: {names}")
    i0 = next(i for i, x in enumerate(a) if x)
    mirrored = a[i0] < 0  # take concordance inverses so the leading coefficient is positive
    p = spec.primes[i0]
    J = parse(cert.knots[i0])
    total = sum(sigma_eval(J, UnitCirclePoint(p, r)) for r in range(p))
    bound = spec.target
    margin = total - bound
    out = NonsolvabilityReport("PASS" if margin > 0 else "MarginViolated", a, i0 + 1, p, total, bound,
                               Fraction(margin), mirrored)
    if margin <= 0:
        raise MarginViolated(f"sigma sum {total} does not exceed n*L = {bound}", out)
    return out

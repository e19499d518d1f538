"""Family construction, certificate verification and the non-solvability ledger."""

from .certificate import NonsolvabilityReport, nonsolvability_certificate
from .family import (DEFAULT_POOL, FamilySpec, InfectionStage, assemble_iterated, choose_primes, curve_depths,
                     leading_bound)
from .solver import (FamilyCertificate, VerificationReport, constraint_points, paired, pool_elements,
                     solve_family, verify_family)

__all__ = [
    "FamilySpec", "InfectionStage", "FamilyCertificate", "VerificationReport", "NonsolvabilityReport",
    "choose_primes", "leading_bound", "solve_family", "verify_family", "assemble_iterated", "curve_depths",
    "nonsolvability_certificate", "constraint_points", "pool_elements", "paired", "DEFAULT_POOL",
]

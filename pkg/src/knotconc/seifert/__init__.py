"""Seifert matrices and their abelian invariants."""

from .invariants import (alexander_poly, arf, arf_from_delta, det_at_minus_one, levine_tristram,
                         levine_tristram_matrix)
from .matrix import (CATALOG, CORE_CATALOG, EXACT_CATALOG, FIGURE_EIGHT, METABOLIC_31, STEVEDORE,
                     TORUS_QS, TREFOIL, UNKNOT, SeifertMatrix, connected_sum, lookup, mirror,
                     torus_2q, twist)
from .signature import signature_function, signature_integral, unit_circle_roots
from .stepfunction import Jump, StepFunction

__all__ = [
    "SeifertMatrix", "connected_sum", "mirror", "torus_2q", "twist", "lookup",
    "CATALOG", "CORE_CATALOG", "EXACT_CATALOG", "TORUS_QS",
    "UNKNOT", "TREFOIL", "FIGURE_EIGHT", "STEVEDORE", "METABOLIC_31",
    "alexander_poly", "levine_tristram", "levine_tristram_matrix", "arf", "arf_from_delta",
    "det_at_minus_one", "signature_function", "signature_integral", "unit_circle_roots",
    "StepFunction", "Jump",
]

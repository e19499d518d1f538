"""Symbolic knots: sums, mirrors, cables and infections of Seifert-matrix atoms."""

from .evaluate import (abelian_delta, alex_eval, arf_eval, determinant_eval, infection_rho, rho_abelian, sigma_eval,
                       signature_step, to_seifert)
from .grammar import DescriptorSyntaxError, parse, render
from .nodes import INFINITE, Atom, Cable, Infection, KnotDescriptor, Mirror, OrderSpec, Sum, depth_of

__all__ = [
    "Atom", "Sum", "Mirror", "Cable", "Infection", "KnotDescriptor", "OrderSpec", "INFINITE",
    "depth_of", "parse", "render", "DescriptorSyntaxError",
    "sigma_eval", "alex_eval", "abelian_delta", "arf_eval", "determinant_eval", "signature_step", "rho_abelian",
    "infection_rho", "to_seifert",
]

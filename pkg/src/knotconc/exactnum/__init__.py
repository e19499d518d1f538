"""Exact arithmetic substrate: Laurent polynomials, cyclotomic numbers, signatures."""

from .cyclotomic import CyclotomicElement, UnitCirclePoint, certified_sign, eval_at_root
from .hermitian import charpoly, hermitian_signature, is_hermitian
from .laurent import LaurentPoly, poly_from_string
from .rings import QQ, ZZ, Ring

__all__ = [
    "CyclotomicElement", "UnitCirclePoint", "certified_sign", "eval_at_root",
    "charpoly", "hermitian_signature", "is_hermitian",
    "LaurentPoly", "poly_from_string", "QQ", "ZZ", "Ring",
]

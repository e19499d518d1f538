"""Group presentations, Fox calculus and the mixed-coefficient commutator series."""

from .finite import (FiniteGroup, alternating, cyclic, dihedral, label_set, mixed_series_finite_oracle,
                     oracle_groups, quaternion, symmetric)
from .presentation import (FIGURE_EIGHT_GROUP, TREFOIL_GROUP, UNKNOT_GROUP, AbelianQuotientData,
                           GroupPresentation, GroupRingElement, abelianization, alexander_from_presentation,
                           fox_derivative, free_reduce, invert, p1_quotient, p2_quotient, word_from_letters,
                           word_to_letters)

__all__ = [
    "GroupPresentation", "AbelianQuotientData", "GroupRingElement", "abelianization", "p1_quotient",
    "p2_quotient", "fox_derivative", "alexander_from_presentation", "free_reduce", "invert",
    "word_from_letters", "word_to_letters", "TREFOIL_GROUP", "FIGURE_EIGHT_GROUP", "UNKNOT_GROUP",
    "FiniteGroup", "symmetric", "alternating", "dihedral", "cyclic", "quaternion", "oracle_groups",
    "mixed_series_finite_oracle", "label_set",
]

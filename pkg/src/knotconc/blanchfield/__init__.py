"""Alexander modules, Smith forms and the Blanchfield linking form."""

from .module import (AlexanderModule, BlanchfieldValue, blanchfield_pair, delta_mod_p_nontrivial,
                     generates, generates_module, is_nonsingular, mod_p_nontrivial, module_from_matrix,
                     module_from_seifert, presentation_matrix, self_annihilating, smith_normal_form)

__all__ = [
    "AlexanderModule", "BlanchfieldValue", "module_from_seifert", "module_from_matrix",
    "presentation_matrix", "smith_normal_form", "blanchfield_pair", "is_nonsingular", "generates",
    "generates_module", "self_annihilating", "mod_p_nontrivial", "delta_mod_p_nontrivial",
]

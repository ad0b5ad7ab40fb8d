"""Quivers with quadratic relations for categories of special modules.

The pipeline: a `JordanSpec` (simple ideals plus a square-zero radical)
maps to a graded Lie datum, whose module category is presented by a colored
quiver with quadratic relations; exact character computations over the
classical root systems back every step, and a resolution engine certifies
linearity of the graded resolutions.
"""

from .jordan import (Albert, BiRepresentation, Bilinear, Field, Hermitian,
                     JordanSpec, StructureConstants, TensorOfSpecial, Unital,
                     check_birepresentation, check_jordan_identity, peirce_split,
                     plus_product, regular_birep, unitalize, validate_spec)
from .tkk import (LieDatum, ShortGradedLie, central_extension_dim,
                  jordan_from_short_pair, lie_datum_of_spec, minimality_check,
                  tkk_construct)
from .weights import (Character, RootSystem, composite, dual_weight,
                      ext_sym_square, fs_indicator, tensor_decompose,
                      trivial_multiplicity, weight_multiplicities, weyl_dim)
from .catalog import (E7, SL, SL2, SO1, SO2, SP, duality_form,
                      grading_eigenvalues, is_s_half, restrict_s,
                      s_half_simples, s_one_simples)
from .quiver import (QuiverReport, assemble, arrows_of, classify_block,
                     group_radical, relations_of, report_from_dict,
                     report_to_dict, wildness_flag)
from .pathalg import (PresentedAlgebra, ext_algebra, from_presentation,
                      koszul_check, minimal_resolution, pi_product,
                      segre_product, sym_algebra)

__version__ = "0.1.0"

__all__ = [
    "Albert", "BiRepresentation", "Bilinear", "Character", "E7", "Field",
    "Hermitian", "JordanSpec", "LieDatum", "PresentedAlgebra", "QuiverReport",
    "RootSystem", "SL", "SL2", "SO1", "SO2", "SP", "ShortGradedLie",
    "StructureConstants", "TensorOfSpecial", "Unital", "assemble",
    "arrows_of", "central_extension_dim", "check_birepresentation",
    "check_jordan_identity", "classify_block", "composite", "dual_weight",
    "duality_form", "ext_algebra", "ext_sym_square", "from_presentation",
    "fs_indicator", "grading_eigenvalues", "group_radical", "is_s_half",
    "jordan_from_short_pair", "koszul_check", "lie_datum_of_spec",
    "minimal_resolution", "minimality_check", "peirce_split", "pi_product",
    "plus_product", "regular_birep", "relations_of", "report_from_dict",
    "report_to_dict", "restrict_s", "s_half_simples", "s_one_simples",
    "segre_product", "sym_algebra", "tensor_decompose", "tkk_construct",
    "trivial_multiplicity", "unitalize", "validate_spec",
    "weight_multiplicities", "weyl_dim", "wildness_flag",
]

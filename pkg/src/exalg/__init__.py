"""Exact-arithmetic workbench for the normed division algebras and the
exceptional structures they generate.

Everything is built from multiplication tables over the rationals:
Cayley-Dickson doubling up through the sedenions, Clifford algebras as
blade tables, normed trialities, hermitian Jordan matrix algebras with
the octonionic projective geometry, derivation algebras computed as
exact nullspaces, and the sixteen magic-square Lie algebras with their
Jacobi and Killing verifications.  No floats anywhere; every check
either holds exactly or returns a witness.
"""

__version__ = "0.1.0"

from .algebras import StarAlgebra, Element, inner, commutator, associator
from .cayley_dickson import (real_algebra, complex_algebra, quaternions,
                             tower_octonions, canonical_octonions, sedenions,
                             cd_tower, cd_double, FANO_LINES,
                             check_cd_propositions, find_zero_divisor,
                             basic_triple_iso)
from .clifford import clifford, even_subalgebra, pinor_rep_check
from .triality import (Triality, triality_from_algebra,
                       algebra_from_triality, reconstruction_matches,
                       check_normed)
from .jordan import (JordanElement, jordan_product, jordan_basis, trace3,
                     det3, det2, cross, polarize_det, ProjectivePoint,
                     point_from_vector, incident, collinear, line_through,
                     hopf, hopf_left, projective_axiom_suite,
                     SpinFactorElement, h2_iso, det_preserving_liealg)
from .derivations import (derivation_algebra, jordan_derivation_algebra,
                          inner_derivation, inner_span_rank,
                          g2_geometry_suite, so_decomposition_checks,
                          associator_form_constant, der_sa3_liealg)
from .liealg import (LieAlgebra, jacobi_check, killing_form,
                     killing_signature, killing_ad_invariance,
                     build_from_operators, export_json_dict,
                     import_json_dict)
from .magic import (tensor_algebra, vinberg_bracket, magic_liealg,
                    magic_dimension, dimension_accounting,
                    check_swap_isomorphism)

__all__ = [
    "StarAlgebra", "Element", "inner", "commutator", "associator",
    "real_algebra", "complex_algebra", "quaternions", "tower_octonions",
    "canonical_octonions", "sedenions", "cd_tower", "cd_double",
    "FANO_LINES", "check_cd_propositions", "find_zero_divisor",
    "basic_triple_iso",
    "clifford", "even_subalgebra", "pinor_rep_check",
    "Triality", "triality_from_algebra", "algebra_from_triality",
    "reconstruction_matches", "check_normed",
    "JordanElement", "jordan_product", "jordan_basis", "trace3", "det3",
    "det2", "cross", "polarize_det", "ProjectivePoint", "point_from_vector",
    "incident", "collinear", "line_through", "hopf", "hopf_left",
    "projective_axiom_suite", "SpinFactorElement", "h2_iso",
    "det_preserving_liealg",
    "derivation_algebra", "jordan_derivation_algebra", "inner_derivation",
    "inner_span_rank", "g2_geometry_suite", "so_decomposition_checks",
    "associator_form_constant", "der_sa3_liealg",
    "LieAlgebra", "jacobi_check", "killing_form", "killing_signature",
    "killing_ad_invariance", "build_from_operators", "export_json_dict",
    "import_json_dict",
    "tensor_algebra", "vinberg_bracket", "magic_liealg", "magic_dimension",
    "dimension_accounting", "check_swap_isomorphism",
]

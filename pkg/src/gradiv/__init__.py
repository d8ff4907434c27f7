"""Exact construction, checking and classification of real graded division algebras."""

from .abgroups import AbelianGroup, GroupHom, enumerate_automorphisms, group_profile, quotient_by, smith_universal_group
from .classify import InvariantVector, PairSpec, classify, invariant_vector, pairs_equivalent
from .constructions import (
    CliffordSignature,
    DimensionFunction,
    Presentation,
    building_block,
    catalog,
    catalog_labels,
    clifford_graded,
    endo_algebra,
    from_presentation,
    pauli_grading,
)
from .errors import GradivError
from .galgebra import (
    GradedAlgebra,
    center,
    centralizer,
    check_division_grading,
    coarsen,
    commutation_data,
    graded_subalgebra,
    identity_component,
    multiply,
    recognize_division,
    tensor_product,
    trace_form_signature,
    underlying_type,
    universal_grading_group,
    validate,
)
from .isomaps import GradedMap, builtin_equivalences, search_monomial_iso, verify_graded_map
from .labels import ClassLabel
from .scalars import Scalar, real_sign, scalar_arith

__all__ = [
    "AbelianGroup", "GroupHom", "enumerate_automorphisms", "group_profile", "quotient_by", "smith_universal_group",
    "InvariantVector", "PairSpec", "classify", "invariant_vector", "pairs_equivalent",
    "CliffordSignature", "DimensionFunction", "Presentation", "building_block", "catalog", "catalog_labels",
    "clifford_graded", "endo_algebra", "from_presentation", "pauli_grading",
    "GradivError",
    "GradedAlgebra", "center", "centralizer", "check_division_grading", "coarsen", "commutation_data",
    "graded_subalgebra", "identity_component", "multiply", "recognize_division", "tensor_product",
    "trace_form_signature", "underlying_type", "universal_grading_group", "validate",
    "GradedMap", "builtin_equivalences", "search_monomial_iso", "verify_graded_map",
    "ClassLabel",
    "Scalar", "real_sign", "scalar_arith",
]

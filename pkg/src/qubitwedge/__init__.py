"""Four-qubit states as 4-vectors in eight modes: exact e7 tools for SLOCC and LU questions."""
from .canonical import (
    LocalOperator,
    QubitState,
    a_state,
    appendix_c_fixture,
    cartan_basis,
    embed,
    family_representative,
    local_to_matrix8,
    nilpotent_triple,
    pauli_stabilizer_generators,
    unembed,
)
from .classify import fingerprint, identify_class, slocc_equivalent
from .e7 import E7Element, ad_matrix, bracket, sigma, theta
from .exterior import MultiVector, compound, derivation_action, interior, vol_dual, wedge
from .factor import factor_block_perm, is_sov_approx, theorem3_factor
from .invariants import (
    interpolate_genericity,
    invariant,
    is_generic,
    katanova_matrix,
    restricted_invariants,
    verify_appendix_identities,
)
from .jordan import is_nilpotent, is_semisimple, jordan_decompose
from .scalars import ApproxScalar, ExactScalar, radical

__version__ = "0.1.0"

__all__ = [
    "LocalOperator",
    "QubitState",
    "a_state",
    "appendix_c_fixture",
    "cartan_basis",
    "embed",
    "family_representative",
    "local_to_matrix8",
    "nilpotent_triple",
    "pauli_stabilizer_generators",
    "unembed",
    "fingerprint",
    "identify_class",
    "slocc_equivalent",
    "E7Element",
    "ad_matrix",
    "bracket",
    "sigma",
    "theta",
    "MultiVector",
    "compound",
    "derivation_action",
    "interior",
    "vol_dual",
    "wedge",
    "factor_block_perm",
    "is_sov_approx",
    "theorem3_factor",
    "interpolate_genericity",
    "invariant",
    "is_generic",
    "katanova_matrix",
    "restricted_invariants",
    "verify_appendix_identities",
    "is_nilpotent",
    "is_semisimple",
    "jordan_decompose",
    "ApproxScalar",
    "ExactScalar",
    "radical",
]

"""Order-6 complex Hadamard matrices: a two-parameter nonaffine family,
its subfamilies, exact equivalence decisions, fingerprint invariants,
numerical search, and order-12 block composition."""

from .compose import ComposeSpec, block_compose, compose12
from .core import (
    DEFAULT_TOL,
    EquivalenceWitness,
    Fingerprint,
    apply_equivalence,
    dagger,
    dephase,
    fingerprint,
    is_hadamard,
    modulus_defect,
    transpose,
    unitarity_defect,
)
from .equivalence import (
    EquivalenceResult,
    are_equivalent,
    fingerprint_match,
    verify_witness,
)
from .errors import (
    DimensionMismatch,
    HadamardError,
    InadmissibleSigns,
    MaxIterExceeded,
    NearZeroEntry,
    NotHadamard,
    OrderUnsupported,
    ParamOutOfRange,
    SingularZ,
    UnknownFamily,
)
from .families import (
    REPRESENTATIVE_SIGNS,
    SignPattern,
    admissible_sign_patterns,
    border_h,
    dita_corner,
    dita_d6,
    family_h,
    family_h_with_signs,
    f_factor,
    fourier_f6,
    reduce_params,
    self_adjoint_h,
    solve_ab,
    symmetric_m,
    z_block,
)
from .search import Classification, SearchConfig, SearchResult, classify, project_search

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "REPRESENTATIVE_SIGNS",
    "Classification",
    "ComposeSpec",
    "DimensionMismatch",
    "EquivalenceResult",
    "EquivalenceWitness",
    "Fingerprint",
    "HadamardError",
    "InadmissibleSigns",
    "MaxIterExceeded",
    "NearZeroEntry",
    "NotHadamard",
    "OrderUnsupported",
    "ParamOutOfRange",
    "SearchConfig",
    "SearchResult",
    "SignPattern",
    "SingularZ",
    "UnknownFamily",
    "admissible_sign_patterns",
    "apply_equivalence",
    "are_equivalent",
    "block_compose",
    "border_h",
    "classify",
    "compose12",
    "dagger",
    "dephase",
    "dita_corner",
    "dita_d6",
    "family_h",
    "family_h_with_signs",
    "f_factor",
    "fingerprint",
    "fingerprint_match",
    "fourier_f6",
    "is_hadamard",
    "modulus_defect",
    "project_search",
    "reduce_params",
    "self_adjoint_h",
    "solve_ab",
    "symmetric_m",
    "transpose",
    "unitarity_defect",
    "verify_witness",
    "z_block",
]

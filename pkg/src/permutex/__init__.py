"""Permutation complexity of the Thue-Morse word and related morphic words."""

from .complexity import (
    ComplexityReport,
    PermSet,
    complexity_report,
    enumerate_perms,
    tau_closed_form,
    tau_recursive,
    upper_bound_check,
)
from .errors import (
    BadLiteral,
    CensusViolation,
    DomainTooSmall,
    InconsistentForm,
    NonStabilized,
    NotProlongable,
    PermutexError,
    UnresolvedComparison,
    UnsupportedMorphism,
)
from .perms import (
    Origin,
    Subpermutation,
    complement_perm,
    form_of,
    perm,
    restrict_left,
    restrict_middle,
    restrict_right,
    subpermutation,
)
from .tm_action import forward_image, phi, phi_L, phi_M, phi_R
from .typek import (
    PairClassification,
    PairKind,
    classify_pair,
    count_doubled_forms,
    detect_type_k,
    predicted_pair_type,
    same_form_census,
)
from .words import (
    DOUBLING,
    FIBONACCI,
    THUE_MORSE,
    Morphism,
    Order,
    WordPrefix,
    apply_morphism,
    factors,
    is_overlap_free,
    iterate_fixed_point,
    named_word,
    shift_compare,
    thue_morse,
)

__version__ = "0.1.0"

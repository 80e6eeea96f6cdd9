"""Braid words, cuspidal factorizations, complement presentations, geometry."""

from .braid import (
    BraidWord,
    CanonicalForm,
    Permutation,
    canonical_form,
    conjugacy_test,
    enumerate_braids,
    equals,
    exponent_sum,
    format_word,
    full_twist,
    half_twist,
    identity_word,
    is_positive,
    normalized,
    parse_word,
    permutation_of,
)
from .complement import (
    FinitePresentation,
    FreeWord,
    artin_action,
    enumerate_homs,
    format_homs,
    format_presentation,
    group_order,
    parse_presentation,
    simplify,
    zvk_presentation,
)
from .equivalence import (
    EquivalenceVerdict,
    Fingerprint,
    SearchBudget,
    canonical_key,
    decide_equivalence,
    explore_orbit,
    fingerprint,
    format_verdict,
    parse_verdict,
    replay,
)
from .errors import FormatError, SearchBudgetExceeded
from .factorization import (
    CuspidalFactor,
    Factorization,
    conjugate_all,
    factor_words,
    format_factorization,
    hurwitz_move,
    parse_factorization,
    product_word,
    profile_exponent_ok,
    search_factorization,
    singularity_counts,
    validate,
)
from .geometry import (
    CurveInvariants,
    ProjLine,
    ProjPoint,
    branch_curve_invariants,
    check_consistency,
    format_arrangement,
    format_invariants,
    hesse_dual_lines,
    intersection_lattice,
)

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CanonicalForm",
    "CurveInvariants",
    "CuspidalFactor",
    "EquivalenceVerdict",
    "Factorization",
    "FinitePresentation",
    "Fingerprint",
    "FormatError",
    "FreeWord",
    "Permutation",
    "ProjLine",
    "ProjPoint",
    "SearchBudget",
    "SearchBudgetExceeded",
    "artin_action",
    "branch_curve_invariants",
    "canonical_form",
    "canonical_key",
    "check_consistency",
    "conjugacy_test",
    "conjugate_all",
    "decide_equivalence",
    "enumerate_braids",
    "enumerate_homs",
    "equals",
    "explore_orbit",
    "exponent_sum",
    "factor_words",
    "fingerprint",
    "format_arrangement",
    "format_factorization",
    "format_homs",
    "format_invariants",
    "format_presentation",
    "format_verdict",
    "format_word",
    "full_twist",
    "group_order",
    "half_twist",
    "hesse_dual_lines",
    "hurwitz_move",
    "identity_word",
    "intersection_lattice",
    "is_positive",
    "normalized",
    "parse_factorization",
    "parse_presentation",
    "parse_verdict",
    "parse_word",
    "permutation_of",
    "product_word",
    "profile_exponent_ok",
    "replay",
    "search_factorization",
    "simplify",
    "singularity_counts",
    "validate",
    "zvk_presentation",
]

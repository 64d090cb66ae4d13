"""Generalized period-doubling sequences over {0..k-1}.

Finite words under the doubling substitution 0 -> 01, 1 -> 02, ...,
(k-1) -> 00; palindromic prefixes; kernel words; gap sequences; the
alternating kernel/gap factorization of the fixed point; and a
verification suite that cross-checks every identity against slow
definitional routes.
"""

from .words import (
    CAP_ENV_VAR,
    DEFAULT_CAP,
    Alphabet,
    CapExceeded,
    Occurrence,
    Word,
    active_cap,
    concat,
    exchange,
    find_in_fixed_point,
    first_mismatch,
    is_palindrome,
    iterate,
    lcp,
    letter_at,
    mirror,
    mirror_substitute,
    occurrences,
    parse_word,
    prefix,
    slice_word,
    substitute,
    word,
)
from .reports import (
    FAIL,
    OUT_OF_DOMAIN,
    PASS,
    Falsification,
    VerificationReport,
)
from .prefixes import (
    PrefixEntry,
    PrefixFamily,
    build_prefix_family,
    check_descending_product,
    check_mirror_product,
    check_permuted_product_lcp,
    check_product_factor,
    desubstitute_palindrome,
    doubling_numbers,
    letter_variant,
    palindrome_equivalence,
    sample_factors,
)
from .kernel import (
    KernelTable,
    binary_kernel_factorization,
    is_kernel_palindromic,
    kernel_first_occurrence,
    kernel_numbers,
    kernel_word,
    parity_divergences,
)
from .gaps import (
    FactorizationToken,
    Gap,
    GapScan,
    GapTable,
    StarSuffix,
    assemble_from_kernel_gaps,
    check_gap_recurrence,
    check_kernel_expansion,
    check_kernel_overlap_identity,
    closed_form_gap_length,
    factor_gaps,
    factorize_stream,
    gap_index_divergences,
    gap_length,
    gap_lengths,
    kernel_gap,
)
from .oracle import (
    ALL_CHECKS,
    DOCUMENTED_CLOSED_FORM_DIVERGENCE,
    DOCUMENTED_CONGRUENCE_MISMATCH,
    check_random_access,
    congruence_check,
    is_documented_failure,
    naive_gaps,
    naive_occurrences,
    naive_prefix,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ALL_CHECKS",
    "CAP_ENV_VAR",
    "CapExceeded",
    "DEFAULT_CAP",
    "DOCUMENTED_CLOSED_FORM_DIVERGENCE",
    "DOCUMENTED_CONGRUENCE_MISMATCH",
    "FAIL",
    "FactorizationToken",
    "Falsification",
    "Gap",
    "GapScan",
    "GapTable",
    "KernelTable",
    "OUT_OF_DOMAIN",
    "Occurrence",
    "PASS",
    "PrefixEntry",
    "PrefixFamily",
    "StarSuffix",
    "VerificationReport",
    "Word",
    "active_cap",
    "assemble_from_kernel_gaps",
    "binary_kernel_factorization",
    "build_prefix_family",
    "check_descending_product",
    "check_gap_recurrence",
    "check_kernel_expansion",
    "check_kernel_overlap_identity",
    "check_mirror_product",
    "check_permuted_product_lcp",
    "check_product_factor",
    "check_random_access",
    "closed_form_gap_length",
    "concat",
    "congruence_check",
    "desubstitute_palindrome",
    "doubling_numbers",
    "exchange",
    "factor_gaps",
    "factorize_stream",
    "find_in_fixed_point",
    "first_mismatch",
    "gap_index_divergences",
    "gap_length",
    "gap_lengths",
    "is_documented_failure",
    "is_kernel_palindromic",
    "is_palindrome",
    "iterate",
    "kernel_first_occurrence",
    "kernel_gap",
    "kernel_numbers",
    "kernel_word",
    "lcp",
    "letter_at",
    "letter_variant",
    "mirror",
    "mirror_substitute",
    "naive_gaps",
    "naive_occurrences",
    "naive_prefix",
    "occurrences",
    "palindrome_equivalence",
    "parity_divergences",
    "parse_word",
    "prefix",
    "sample_factors",
    "slice_word",
    "substitute",
    "verify_all",
    "word",
]

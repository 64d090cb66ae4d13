"""Slow definitional routes and the full verification sweep.

Everything here recomputes from first principles: prefixes by letterwise
image expansion, occurrences by a quadratic scan, gaps by direct position
bookkeeping.  The fast implementations are trusted only because these
routes agree with them.
"""
from __future__ import annotations

import time

from .gaps import (
    assemble_from_kernel_gaps,
    check_gap_recurrence,
    check_kernel_expansion,
    check_kernel_overlap_identity,
    closed_form_gap_length,
    factorize_stream,
    gap_length,
    gap_lengths,
)
from .kernel import (
    KernelTable,
    binary_kernel_factorization,
    kernel_first_occurrence,
)
from .prefixes import (
    build_prefix_family,
    check_descending_product,
    check_mirror_product,
    check_permuted_product_lcp,
    check_product_factor,
    desubstitute_palindrome,
    palindrome_equivalence,
    sample_factors,
)
from .reports import (
    FAIL,
    Falsification,
    VerificationReport,
    failed,
    out_of_domain,
    passed,
)
from .words import (
    CapExceeded,
    Word,
    active_cap,
    is_palindrome,
    letter_at,
    prefix,
    substitute,
)

# first position (1-based) where reducing letters mod k-1 stops matching the
# binary sequence; frozen from the definitional scan
DOCUMENTED_CONGRUENCE_MISMATCH = {3: 8, 4: 4, 5: 4, 6: 4, 7: 4, 8: 4}

# first gap index where the doubling-plus-one extrapolation overshoots the
# construction's true length; frozen from the definitional scan
DOCUMENTED_CLOSED_FORM_DIVERGENCE = {3: 6, 4: 8, 5: 10, 6: 12, 7: 14, 8: 16}


def naive_prefix(k: int, length: int, cap: int | None = None) -> Word:
    """The first `length` letters by repeated letterwise image expansion."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    limit = active_cap(cap)
    if length > limit:
        raise CapExceeded(length, limit)
    if k < 2 or k > 256:
        raise ValueError(f"k must be in 2..256, got {k}")
    images = [(0, (m + 1) % k) for m in range(k)]
    seq = [0]
    while len(seq) < length:
        seq = [x for m in seq for x in images[m]]
    return Word(k, bytes(seq[:length]))


def naive_occurrences(pattern, text) -> list[int]:
    """1-based start positions of every (possibly overlapping) occurrence."""
    p = list(pattern.to_list() if isinstance(pattern, Word) else pattern)
    t = list(text.to_list() if isinstance(text, Word) else text)
    if not p:
        raise ValueError("pattern must be nonempty")
    return [i + 1 for i in range(len(t) - len(p) + 1) if t[i : i + len(p)] == p]


def naive_gaps(pattern, text) -> tuple[list[int], list[tuple[str, list[int]]]]:
    """Prefix before the first occurrence, then (relation, letters) per gap.

    Consecutive occurrences are adjacent (empty gap), separated by the
    letters between them, or overlapped, in which case the shared letters
    are reported.  Positions are tracked directly from the occurrence list.
    """
    p = list(pattern.to_list() if isinstance(pattern, Word) else pattern)
    t = list(text.to_list() if isinstance(text, Word) else text)
    starts = naive_occurrences(p, t)
    if len(starts) < 2:
        raise ValueError(f"need at least two occurrences, found {len(starts)}")
    g0 = t[: starts[0] - 1]
    out = []
    for a, b in zip(starts, starts[1:]):
        last_covered = a + len(p) - 1
        if last_covered + 1 == b:
            out.append(("adjacent", []))
        elif last_covered < b:
            out.append(("separated", t[last_covered : b - 1]))
        else:
            out.append(("overlapped", t[b - 1 : last_covered]))
    return g0, out


def congruence_check(k: int, length: int, cap: int | None = None) -> VerificationReport:
    """Does reducing letters mod k-1 reproduce the k=2 sequence?  (It does not.)"""
    started = time.perf_counter()
    params = {"k": k, "length": length}
    if k == 2:
        return out_of_domain(
            "congruence_mod", {**params, "note": "k = 2 compares the sequence with itself"},
            started,
        )
    base = prefix(2, length, cap)
    this = prefix(k, length, cap)
    for i in range(length):
        if this.letters[i] % (k - 1) != base.letters[i] % (k - 1):
            return failed(
                "congruence_mod", params, started, mismatch=i + 1,
                counterexample=(
                    f"letter {this.letters[i]} reduces to {this.letters[i] % (k - 1)} "
                    f"mod {k - 1}, binary sequence has {base.letters[i]}"
                ),
            )
    return passed("congruence_mod", params, started)


def check_random_access(k: int, length: int, cap: int | None = None) -> VerificationReport:
    """Direct indexing against the letterwise-expanded prefix."""
    started = time.perf_counter()
    params = {"k": k, "length": length}
    reference = naive_prefix(k, length, cap)
    for i in range(length):
        if letter_at(k, i) != reference.letters[i]:
            return failed(
                "random_access", params, started, mismatch=i + 1,
                counterexample=f"letter_at gives {letter_at(k, i)}, expansion gives {reference.letters[i]}",
            )
    return passed("random_access", params, started)


def _sweep(name: str, params: dict, reports) -> VerificationReport:
    started = time.perf_counter()
    for report in reports:
        if report.status == FAIL:
            return report
    return passed(name, params, started)


def _guarded(name: str, params: dict, fn) -> VerificationReport:
    started = time.perf_counter()
    try:
        fn()
    except Falsification as exc:
        if exc.report is not None:
            return exc.report
        return failed(name, params, started, counterexample=str(exc))
    return passed(name, params, started)


def _check_prefix_family(k, depth, cap):
    return _guarded(
        "prefix_family", {"k": k, "n_max": depth},
        lambda: build_prefix_family(k, depth, cap),
    )


def _check_descending_product(k, depth, cap):
    return _sweep(
        "descending_product", {"k": k, "n": f"2..{depth}"},
        (check_descending_product(k, n, cap) for n in range(2, depth + 1)),
    )


def _check_mirror_product(k, depth, cap):
    return check_mirror_product(k, depth, cap)


def _check_permuted_product_lcp(k, depth, cap):
    if depth < k:
        return out_of_domain(
            "permuted_product_lcp", {"k": k, "note": f"needs depth >= {k}"}, time.perf_counter()
        )
    return _sweep(
        "permuted_product_lcp", {"k": k, "n": f"{k}..{depth}", "i": f"1..{k - 1}"},
        (
            check_permuted_product_lcp(k, n, i, cap)
            for n in range(k, depth + 1)
            for i in range(1, k)
        ),
    )


def _check_product_factor(k, depth, cap):
    bound = min(depth, 5)
    params = {"k": k, "n": f"0..{bound}", "l": f"0..{bound}"}
    started = time.perf_counter()
    for n in range(bound + 1):
        for l in range(bound + 1):
            occ = check_product_factor(k, n, l, cap=cap)
            if n > l and occ.start != 1:
                return failed(
                    "product_factor", params, started,
                    counterexample=(
                        f"W_{n} W_{l} with n > l should be a prefix, "
                        f"first occurrence starts at {occ.start}"
                    ),
                )
    return passed("product_factor", params, started)


def _check_palindrome_structure(k, depth, cap):
    window = min(depth + 3, 13)
    params = {"k": k, "samples": 12, "window": f"2^{window}"}
    started = time.perf_counter()
    for v in sample_factors(k, 12, depth=window, seed=0, cap=cap):
        triple = palindrome_equivalence(k, v, window, cap)
        if len(set(triple)) != 1:
            return failed(
                "palindrome_structure", params, started,
                counterexample=f"{v.text()!r} splits the all-or-none triple: {triple}",
            )
        if is_palindrome(v):
            preimage, rule = desubstitute_palindrome(k, v, window, cap)
            image = substitute(preimage)
            rebuilt = image + Word(k, b"\x00") if rule == "append-zero" else Word(k, image.letters[1:])
            if rebuilt != v:
                return failed(
                    "palindrome_structure", params, started,
                    counterexample=f"{rule} preimage of {v.text()!r} rebuilds {rebuilt.text()!r}",
                )
    return passed("palindrome_structure", params, started)


def _check_palindromic_prefixes(k, depth, cap):
    params = {"k": k, "n_max": depth}
    started = time.perf_counter()
    family = build_prefix_family(k, depth, cap)
    for entry in family.entries:
        if not is_palindrome(entry.p):
            return failed(
                "palindromic_prefixes", params, started,
                counterexample=f"p_{entry.n} is not a palindrome",
            )
    kern = KernelTable.build(k, depth + k, cap)
    for i, r_word in enumerate(kern.words):
        if not is_palindrome(r_word):
            return failed(
                "palindromic_prefixes", params, started,
                counterexample=f"kernel word {i} is not a palindrome",
            )
    return passed("palindromic_prefixes", params, started)


def _check_kernel_lengths(k, depth, cap):
    i_max = depth + k
    params = {"k": k, "i_max": i_max}
    started = time.perf_counter()
    kern = KernelTable.build(k, i_max, cap)  # length agreement enforced internally
    r = kern.r
    for i in range(k + 1, i_max + 1):
        expected = 2 * r[i - 1] + (1 if i % k == 1 else -1)
        if r[i] != expected:
            return failed(
                "kernel_lengths", params, started,
                counterexample=f"r_{i} = {r[i]} breaks the doubling step ({expected})",
            )
    return passed("kernel_lengths", params, started)


def _check_kernel_occurrences(k, depth, cap):
    bound = min(depth, 9)
    return _guarded(
        "kernel_occurrences", {"k": k, "i": f"1..{bound}"},
        lambda: [kernel_first_occurrence(k, i, cap) for i in range(1, bound + 1)],
    )


def _check_kernel_gap_assembly(k, depth, cap):
    if k == 2:
        return out_of_domain(
            "kernel_gap_assembly", {"k": k, "note": "defined for k >= 3"}, time.perf_counter()
        )
    bound = min(depth, 10)
    return _guarded(
        "kernel_gap_assembly", {"k": k, "n": f"1..{bound}"},
        lambda: [assemble_from_kernel_gaps(k, n, cap) for n in range(1, bound + 1)],
    )


def _identity_sweep(name, check, k, depth, cap):
    if k == 2:
        return out_of_domain(name, {"k": k, "note": "defined for k >= 3"}, time.perf_counter())
    hi = max(depth, k + 2)
    return _sweep(
        name, {"k": k, "n": f"{k + 1}..{hi}"},
        (check(k, n, cap) for n in range(k + 1, hi + 1)),
    )


def _check_kernel_overlap_identity(k, depth, cap):
    return _identity_sweep("kernel_overlap_identity", check_kernel_overlap_identity, k, depth, cap)


def _check_kernel_expansion(k, depth, cap):
    return _identity_sweep("kernel_expansion", check_kernel_expansion, k, depth, cap)


def _check_gap_recurrence(k, depth, cap):
    return _identity_sweep(
        "gap_recurrence", lambda kk, n, c: check_gap_recurrence(kk, n, c)[0], k, depth, cap
    )


def _check_gap_length_routes(k, depth, cap):
    if k == 2:
        return out_of_domain(
            "gap_length_routes", {"k": k, "note": "every gap is empty"}, time.perf_counter()
        )
    hi = max(depth, k + 2)
    return _guarded(
        "gap_length_routes", {"k": k, "n": f"1..{hi}"},
        lambda: [gap_length(k, n, cap) for n in range(1, hi + 1)],
    )


def _check_gap_closed_form(k, depth, cap):
    """The doubling-plus-one extrapolation against the true gap lengths.

    Known to overshoot from index 2k on; the first divergence is frozen in
    DOCUMENTED_CLOSED_FORM_DIVERGENCE so verify_all can report it as a
    documented finding rather than a regression.
    """
    if k == 2:
        return out_of_domain(
            "gap_closed_form", {"k": k, "note": "every gap is empty"}, time.perf_counter()
        )
    hi = max(depth, 2 * k + 1)
    params = {"k": k, "n": f"{k + 1}..{hi}"}
    started = time.perf_counter()
    truth = gap_lengths(k, hi)
    for n in range(k + 1, hi + 1):
        claimed = closed_form_gap_length(k, n)
        if claimed != truth[n]:
            return failed(
                "gap_closed_form", params, started, mismatch=n,
                counterexample=(
                    f"extrapolation gives g_{n} = {claimed}, "
                    f"construction and recurrence give {truth[n]}"
                ),
            )
    return passed("gap_closed_form", params, started)


def _check_factorization_stream(k, depth, cap):
    length_cap = 1 << min(depth, 14)
    params = {"k": k, "length_cap": length_cap}
    started = time.perf_counter()
    expected_kind, expected_index, expected_start = "kernel", 1, 1
    try:
        for token in factorize_stream(k, length_cap, cap):
            if (token.kind, token.index, token.start) != (
                expected_kind, expected_index, expected_start,
            ):
                return failed(
                    "factorization_stream", params, started,
                    counterexample=(
                        f"expected {expected_kind} {expected_index} at {expected_start}, "
                        f"got {token.kind} {token.index} at {token.start}"
                    ),
                )
            expected_start += len(token.word)
            if token.kind == "kernel":
                expected_kind = "gap"
            else:
                expected_kind, expected_index = "kernel", expected_index + 1
    except Falsification as exc:
        if exc.report is not None:
            return exc.report
        return failed("factorization_stream", params, started, counterexample=str(exc))
    return passed("factorization_stream", params, started)


def _check_binary_kernel_tiling(k, depth, cap):
    if k != 2:
        return out_of_domain(
            "binary_kernel_tiling", {"k": k, "note": "gapless tiling holds only for k = 2"},
            time.perf_counter(),
        )
    length_cap = 1 << min(depth, 15)
    return _guarded(
        "binary_kernel_tiling", {"k": k, "length_cap": length_cap},
        lambda: list(binary_kernel_factorization(length_cap, cap)),
    )


def _check_random_access(k, depth, cap):
    return check_random_access(k, 1 << min(depth, 14), cap)


def _check_congruence_mod(k, depth, cap):
    return congruence_check(k, 1 << min(depth, 10), cap)


ALL_CHECKS = (
    ("prefix_family", _check_prefix_family),
    ("descending_product", _check_descending_product),
    ("mirror_product", _check_mirror_product),
    ("permuted_product_lcp", _check_permuted_product_lcp),
    ("product_factor", _check_product_factor),
    ("palindrome_structure", _check_palindrome_structure),
    ("palindromic_prefixes", _check_palindromic_prefixes),
    ("kernel_lengths", _check_kernel_lengths),
    ("kernel_occurrences", _check_kernel_occurrences),
    ("kernel_gap_assembly", _check_kernel_gap_assembly),
    ("kernel_overlap_identity", _check_kernel_overlap_identity),
    ("kernel_expansion", _check_kernel_expansion),
    ("gap_recurrence", _check_gap_recurrence),
    ("gap_length_routes", _check_gap_length_routes),
    ("gap_closed_form", _check_gap_closed_form),
    ("factorization_stream", _check_factorization_stream),
    ("binary_kernel_tiling", _check_binary_kernel_tiling),
    ("random_access", _check_random_access),
    ("congruence_mod", _check_congruence_mod),
)

# checks that fail by design, with the frozen location each must fail at
_DOCUMENTED = {
    "congruence_mod": DOCUMENTED_CONGRUENCE_MISMATCH,
    "gap_closed_form": DOCUMENTED_CLOSED_FORM_DIVERGENCE,
}


def is_documented_failure(report: VerificationReport) -> bool:
    """Known-false claims failing exactly at their frozen locations.

    Two claims are recorded as false rather than patched over: reducing
    letters mod k-1 does not reproduce the binary sequence, and the
    doubling-plus-one gap-length extrapolation overshoots from index 2k.
    Each is documented only for the alphabet sizes that were actually
    scanned; anything else is a genuine regression.
    """
    frozen = _DOCUMENTED.get(report.name)
    return (
        frozen is not None
        and report.status == FAIL
        and report.params.get("k") in frozen
        and report.mismatch == frozen[report.params.get("k")]
    )


def verify_all(k: int, depth: int = 10, cap: int | None = None) -> list[VerificationReport]:
    """Run every check in a fixed order; never raises on falsification."""
    if depth < 2:
        raise ValueError(f"depth must be >= 2, got {depth}")
    return [fn(k, depth, cap) for _, fn in ALL_CHECKS]

"""Gap sequences and the kernel-gap factorization of the fixed point.

The fixed point factorizes as R_1 G_1 R_2 G_2 ... with R_i the kernel words
and G_n the kernel gaps; for k = 2 every gap is empty and the kernel words
alone tile the sequence.  Gaps of an arbitrary factor are also defined here:
consecutive occurrences are adjacent, separated by a word, or overlapping,
in which case the gap is the overlap word taken with inverse orientation.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

from .kernel import KernelTable, kernel_numbers
from .prefixes import build_prefix_family, letter_variant
from .reports import Falsification, VerificationReport, failed, passed
from .words import (
    CapExceeded,
    Occurrence,
    Word,
    active_cap,
    concat,
    first_mismatch,
    iterate,
    mirror_substitute,
    occurrences,
    prefix,
    slice_word,
    substitute,
    word,
)

POSITIVE = "positive"
INVERSE = "inverse"

ADJACENT = "adjacent"
SEPARATED = "separated"
OVERLAPPED = "overlapped"

# beyond this, gap words are tracked by length algebra instead of materialized
_MEASURE_LIMIT = 1 << 20


@dataclass(frozen=True)
class Gap:
    """A gap between consecutive occurrences; inverse orientation marks an overlap."""

    word: Word
    orientation: str = POSITIVE

    def __post_init__(self):
        if self.orientation not in (POSITIVE, INVERSE):
            raise ValueError(f"bad orientation {self.orientation!r}")
        if self.orientation == INVERSE and len(self.word) == 0:
            raise ValueError("an overlap gap cannot be empty")

    @property
    def relation(self) -> str:
        if len(self.word) == 0:
            return ADJACENT
        return SEPARATED if self.orientation == POSITIVE else OVERLAPPED


@dataclass(frozen=True)
class GapScan:
    """Occurrences of one factor in a fixed-point window, with classified gaps."""

    factor: Word
    window: int
    occurrences: tuple[Occurrence, ...]
    g0: Word
    gaps: tuple[Gap, ...]


@dataclass(frozen=True)
class FactorizationToken:
    kind: str  # "kernel" or "gap"
    index: int
    start: int  # 1-based
    word: Word

    @property
    def end(self) -> int:
        return self.start + len(self.word) - 1


@dataclass(frozen=True)
class StarSuffix:
    """The suffix removed at the end of the gap recurrence."""

    k: int
    n: int
    word: Word


def factor_gaps(k: int, w, depth: int, cap: int | None = None) -> GapScan:
    """Classify the gaps between consecutive occurrences of w in a 2^depth window."""
    target = word(k, w)
    if len(target) == 0:
        raise ValueError("factor must be nonempty")
    text = iterate(k, depth, cap)
    occs = occurrences(target, text)
    if len(occs) < 2:
        raise ValueError(
            f"{target.text()!r} occurs {len(occs)} time(s) in the first 2^{depth} letters; "
            "increase depth to classify gaps"
        )
    g0 = Word(k, text.letters[: occs[0].start - 1])
    gaps = []
    n = len(target)
    for a, b in zip(occs, occs[1:]):
        i, j = a.start - 1, b.start - 1
        if i + n == j:
            gaps.append(Gap(Word(k)))
        elif i + n < j:
            gaps.append(Gap(Word(k, text.letters[i + n : j])))
        else:
            gaps.append(Gap(Word(k, text.letters[j : i + n]), INVERSE))
    return GapScan(target, depth, tuple(occs), g0, tuple(gaps))


def _calibrated_gap_words(k: int, n_max: int, cap: int | None) -> list[Word]:
    """Gap words G_0..G_n by the index-cyclic construction.

    G_n is the palindromic prefix p_{n-1} while n < k; from n = k on the
    rule cycles with period k: a plain doubling image when n = 0 (mod k),
    a mirrored image when n = 1 (mod k), and an image with an appended
    zero otherwise.  Appending the zero at EVERY step beyond k+1 looks
    plausible and matches the small tables, but first disagrees with the
    fixed point's actual tiling at n = 2k; the cyclic rule is the one the
    kernel words' first occurrences force.
    """
    # k = 2 degenerates: the cycle covers every index, nothing is ever
    # appended, and all gaps stay empty
    if k == 2:
        return [Word(2)] * (n_max + 1)
    sizes = gap_lengths(k, n_max)
    limit = active_cap(cap)
    if sizes and max(sizes) > limit:
        raise CapExceeded(max(sizes), limit)
    family = build_prefix_family(k, min(max(k - 2, 0), n_max), cap)
    words = [Word(k), Word(k)]  # G_0 (convention) and G_1 are empty
    for n in range(2, n_max + 1):
        if n <= k - 1:
            words.append(family[n - 1].p)
        elif n % k == 0:
            words.append(substitute(words[n - 1]))
        elif n % k == 1:
            words.append(mirror_substitute(words[n - 1]))
        else:
            words.append(substitute(words[n - 1]) + Word(k, b"\x00"))
    return words[: n_max + 1]


def _literal_gap_words(k: int, n_max: int, cap: int | None) -> list[Word]:
    # the unshifted indexing: G_n = p_n through k-2, then the same three rules one index early
    limit = active_cap(cap)
    family = build_prefix_family(k, min(max(k - 2, 0), n_max), cap)
    words = []
    for n in range(n_max + 1):
        if n <= k - 2:
            words.append(family[n].p)
        elif n == k - 1:
            words.append(substitute(words[k - 2]))
        elif n == k:
            words.append(mirror_substitute(words[k - 1]))
        else:
            if 2 * len(words[n - 1]) + 1 > limit:
                raise CapExceeded(2 * len(words[n - 1]) + 1, limit)
            words.append(substitute(words[n - 1]) + Word(k, b"\x00"))
    return words


@dataclass(frozen=True)
class GapTable:
    """Kernel gaps G_0..G_n with their lengths."""

    k: int
    words: tuple[Word, ...]
    g: tuple[int, ...]
    literal_index: bool = False

    @classmethod
    def build(
        cls, k: int, n_max: int, cap: int | None = None, literal_index: bool = False
    ) -> "GapTable":
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        if n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {n_max}")
        builder = _literal_gap_words if literal_index else _calibrated_gap_words
        words = builder(k, n_max, cap)
        return cls(k, tuple(words), tuple(len(w) for w in words), literal_index)

    @property
    def n_max(self) -> int:
        return len(self.words) - 1


def kernel_gap(k: int, n: int, cap: int | None = None, literal_index: bool = False) -> Word:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return GapTable.build(k, n, cap, literal_index).words[n]


def gap_index_divergences(k: int, n_max: int, cap: int | None = None) -> list[int]:
    """Indices where the unshifted gap table differs from the calibrated one."""
    calibrated = GapTable.build(k, n_max, cap)
    literal = GapTable.build(k, n_max, cap, literal_index=True)
    return [n for n in range(n_max + 1) if calibrated.words[n] != literal.words[n]]


@lru_cache(maxsize=64)
def _gap_sizes(k: int, n_max: int) -> tuple[int, ...]:
    if k == 2:
        return (0,) * (n_max + 1)
    sizes = [0]
    for n in range(1, n_max + 1):
        if n <= k - 1:
            sizes.append((1 << (n - 1)) - 1)
        elif n % k in (0, 1):
            sizes.append(2 * sizes[n - 1])
        else:
            sizes.append(2 * sizes[n - 1] + 1)
    return tuple(sizes)


def gap_lengths(k: int, n_max: int) -> list[int]:
    """Exact gap lengths g_0..g_n by the construction's own length algebra."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return list(_gap_sizes(k, n_max))


def closed_form_gap_length(k: int, n: int) -> int:
    """The doubling-plus-one extrapolation (g_{k+1}+1) 2^{n-k-1} - 1.

    Sound while every step from k+1 to n appends a letter, i.e. for
    n <= 2k - 1.  From n = 2k on the cyclic construction doubles without
    appending twice per cycle, so this formula overshoots; it is kept as
    a named route so the divergence can be pinned down rather than hidden.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < k + 1:
        raise ValueError(f"n must be >= k + 1 = {k + 1}, got {n}")
    base = _gap_sizes(k, k + 1)[k + 1]
    return (base + 1) * (1 << (n - (k + 1))) - 1


def gap_length(k: int, n: int, cap: int | None = None) -> int:
    """|G_n| computed by several independent routes, which must agree.

    Routes: the construction itself (measured where the word fits in
    memory, its cyclic length algebra beyond); the recurrence's length
    bookkeeping for n >= k+1; and the closed-form extrapolation on the
    window k+1 <= n <= 2k-1 where it is actually valid.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    sizes = gap_lengths(k, n)
    measurable = max(
        (m for m in range(n + 1) if sizes[m] <= min(active_cap(cap), _MEASURE_LIMIT)),
        default=None,
    )
    if measurable is None:
        construction = sizes[n]
    else:
        value = len(kernel_gap(k, measurable, cap))
        for step in range(measurable + 1, n + 1):
            if step <= k - 1 or step % k not in (0, 1):
                value = 2 * value + 1
            else:
                value = 2 * value
        construction = value
    routes = {"construction": construction}
    if k + 1 <= n <= 2 * k - 1:
        routes["closed-form"] = closed_form_gap_length(k, n)
    if n >= k + 1:
        r = kernel_numbers(k, n)
        recurred = list(sizes[: k + 1])
        for m in range(k + 1, n + 1):
            total = recurred[m - k]
            total += sum(r[m - i] + recurred[m - i] for i in range(2, k))
            total += r[m - 2] + (1 if (m - 1) % k == 1 else 0)
            total += 1 << (m - 2)
            total -= r[m] + (1 if m % k == 0 else 0)
            recurred.append(total)
        routes["recurrence"] = recurred[n]
    if len(set(routes.values())) != 1:
        raise Falsification(f"g_{n} routes disagree for k={k}: {routes}")
    return construction


def assemble_from_kernel_gaps(k: int, n: int, cap: int | None = None) -> tuple[Word, Word]:
    """Rebuild W_n and its companion s^n(1) from kernel words and gaps.

    W_n is R_1 G_1 ... R_n G_n plus the first r_n letters of R_{n+1}, one
    more when n = 0 (mod k); s^n(1) is the remainder of R_{n+1}, then
    G_{n+1}, then the head of R_{n+2}, one letter longer when n+1 = 0
    (mod k).  Both are asserted against direct iteration.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    kern = KernelTable.build(k, n + 2, cap)
    gap = GapTable.build(k, n + 1, cap)
    r = kern.r
    head_len = r[n] + (1 if n % k == 0 else 0)
    parts = []
    for m in range(1, n + 1):
        parts.append(kern.words[m])
        parts.append(gap.words[m])
    assembled = concat(k, parts) + slice_word(kern.words[n + 1], 1, head_len)
    direct = iterate(k, n, cap)
    if assembled != direct:
        raise Falsification(
            f"kernel-gap assembly of W_{n} fails at position "
            f"{first_mismatch(assembled, direct)} for k={k}"
        )
    tail_len = r[n + 1] + (1 if (n + 1) % k == 0 else 0)
    companion = (
        slice_word(kern.words[n + 1], head_len + 1, r[n + 1])
        + gap.words[n + 1]
        + slice_word(kern.words[n + 2], 1, tail_len)
    )
    direct_companion = letter_variant(k, n, 1, cap)
    if companion != direct_companion:
        raise Falsification(
            f"kernel-gap assembly of s^{n}(1) fails at position "
            f"{first_mismatch(companion, direct_companion)} for k={k}"
        )
    return assembled, companion


def check_kernel_overlap_identity(k: int, n: int, cap: int | None = None) -> VerificationReport:
    """R_n equals its own head, then an iterate, then a tail slice of R_{n-k}.

    Two equivalent statements are verified: head + s^{n-k-1}(0) + the tail of
    R_{n-k} after its first r_{n-k-1}(+1) letters, and head + the first
    r_{n-1}(-1) letters of W_{n-k}.  The head is r_{n-1} letters of R_n, one
    more when n = 1 (mod k).
    """
    started = time.perf_counter()
    _require_recursion_domain(k, n)
    one_mod = n % k == 1
    params = {"k": k, "n": n, "branch": "n=1 (mod k)" if one_mod else "other"}
    kern = KernelTable.build(k, n, cap)
    r = kern.r
    target = kern.words[n]
    head = slice_word(target, 1, r[n - 1] + (1 if one_mod else 0))
    middle = iterate(k, n - k - 1, cap)
    tail = slice_word(
        kern.words[n - k], r[n - k - 1] + (2 if one_mod else 1), r[n - k]
    )
    theorem_form = head + middle + tail
    position = first_mismatch(theorem_form, target)
    if position is not None:
        return failed("kernel_overlap_identity", params, started, mismatch=position)
    w_tail = slice_word(iterate(k, n - k, cap), 1, r[n - 1] - (0 if one_mod else 1))
    definition_form = head + w_tail
    position = first_mismatch(definition_form, target)
    if position is not None:
        params["form"] = "definition"
        return failed("kernel_overlap_identity", params, started, mismatch=position)
    return passed("kernel_overlap_identity", params, started)


def check_kernel_expansion(k: int, n: int, cap: int | None = None) -> VerificationReport:
    """R_n equals its own head, the alternating product up to n-(k+1), then R_{n-k}."""
    started = time.perf_counter()
    _require_recursion_domain(k, n)
    one_mod = n % k == 1
    params = {"k": k, "n": n, "branch": "n=1 (mod k)" if one_mod else "other"}
    kern = KernelTable.build(k, n, cap)
    gap = GapTable.build(k, max(n - (k + 1), 0), cap)
    target = kern.words[n]
    head = slice_word(target, 1, kern.r[n - 1] + (1 if one_mod else 0))
    parts = [head]
    for m in range(1, n - (k + 1) + 1):
        parts.append(kern.words[m])
        parts.append(gap.words[m])
    parts.append(kern.words[n - k])
    assembled = concat(k, parts)
    position = first_mismatch(assembled, target)
    if position is None:
        return passed("kernel_expansion", params, started)
    return failed("kernel_expansion", params, started, mismatch=position)


def check_gap_recurrence(
    k: int, n: int, cap: int | None = None
) -> tuple[VerificationReport, StarSuffix]:
    """G_n from G_{n-k}, the alternating block R_{n-k+1} G_{n-k+1} ... R_{n-2} G_{n-2},
    a head of R_{n-1}, and s^{n-2}(2), with a verified suffix removal.

    The head takes r_{n-2} letters of R_{n-1}, one more when n-1 = 1 (mod k).
    The removed suffix is the first r_n letters of R_{n+1}, one more when
    n = 0 (mod k); it must be a genuine suffix of the assembled tail (it sits
    inside s^{n-2}(2)), and what remains must equal G_n with the right length.
    """
    started = time.perf_counter()
    _require_recursion_domain(k, n)
    params = {"k": k, "n": n}
    kern = KernelTable.build(k, n + 1, cap)
    gap = GapTable.build(k, n, cap)
    r = kern.r
    lead_len = r[n - 2] + (1 if (n - 1) % k == 1 else 0)
    star_len = r[n] + (1 if n % k == 0 else 0)
    parts = [gap.words[n - k]]
    for i in range(k - 1, 1, -1):
        parts.append(kern.words[n - i])
        parts.append(gap.words[n - i])
    parts.append(slice_word(kern.words[n - 1], 1, lead_len))
    tail = letter_variant(k, n - 2, 2, cap)
    assembled = concat(k, parts + [tail])
    star = slice_word(kern.words[n + 1], 1, star_len)
    suffix = StarSuffix(k, n, star)
    if not assembled.letters.endswith(star.letters):
        report = failed(
            "gap_recurrence", params, started,
            counterexample=f"removed word {star.text()!r} is not a suffix of the assembly",
        )
        return report, suffix
    if not tail.letters.endswith(star.letters):
        report = failed(
            "gap_recurrence", params, started,
            counterexample=f"removed word {star.text()!r} leaks out of s^{n - 2}(2)",
        )
        return report, suffix
    remainder = Word(k, assembled.letters[: len(assembled) - star_len])
    expected = gap.words[n]
    position = first_mismatch(remainder, expected)
    if position is not None:
        return failed("gap_recurrence", params, started, mismatch=position), suffix
    if len(remainder) != gap_length(k, n, cap):
        report = failed(
            "gap_recurrence", params, started,
            counterexample=f"|G_{n}| = {len(remainder)} disagrees with the length routes",
        )
        return report, suffix
    return passed("gap_recurrence", params, started), suffix


def _require_recursion_domain(k: int, n: int):
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if n < k + 1:
        raise ValueError(f"n must be >= k+1 = {k + 1}, got {n}")


def factorize_stream(
    k: int,
    length_cap: int,
    cap: int | None = None,
    literal_parity: bool = False,
    literal_index: bool = False,
):
    """Alternating kernel/gap tokens R_1 G_1 R_2 G_2 ... starting within length_cap.

    Token starts are contiguous and every token is verified letterwise
    against the fixed point as it is emitted; a mismatch raises
    Falsification naming the token and the absolute position.  With the
    literal_* variants the verification is still performed, so their
    divergence surfaces as a falsification rather than silent output.
    """
    if length_cap < 1:
        raise ValueError(f"length_cap must be >= 1, got {length_cap}")
    # arithmetic pass first: how many indices start within the cap
    n_max = 1
    start = 1
    r = kernel_numbers(k, 1)
    g = gap_lengths(k, 1)
    while True:
        if start + r[n_max] > length_cap:  # the gap after R_{n_max} starts beyond the cap
            break
        n_max += 1
        r = kernel_numbers(k, n_max)
        g = gap_lengths(k, n_max)
        start += r[n_max - 1] + g[n_max - 1]
    kern = KernelTable.build(k, n_max, cap, literal_parity)
    gap = GapTable.build(k, n_max, cap, literal_index)
    end = start + len(kern.words[n_max]) + len(gap.words[n_max])
    reference = prefix(k, end, cap)
    position = 1
    for m in range(1, n_max + 1):
        for kind, token in (("kernel", kern.words[m]), ("gap", gap.words[m])):
            if position > length_cap:
                return
            expected = reference.letters[position - 1 : position - 1 + len(token)]
            if token.letters != expected:
                offset = next(
                    idx for idx, (a, b) in enumerate(zip(token.letters, expected)) if a != b
                )
                raise Falsification(
                    f"{kind} token {m} disagrees with the fixed point at position "
                    f"{position + offset} for k={k}"
                )
            yield FactorizationToken(kind, m, position, token)
            position += len(token)

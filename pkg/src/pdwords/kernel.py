"""Kernel words: the palindromic building blocks of the fixed point.

The i-th kernel word R_i has length r_i, where the r_i satisfy the same
k-term recurrence as the prefix lengths minus a constant k-2.  Beyond the
explicit base words ("000" at index k+1, "10101" at index k+2) each R_i is
the substitution image of its predecessor with a zero appended when
i = 1 (mod k) and the leading zero stripped otherwise.  The even/odd branch
sometimes quoted for this construction breaks |R_i| = r_i (first at k=4,
i=7) and is kept only behind literal_parity for comparison.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .reports import Falsification
from .words import CapExceeded, Occurrence, Word, active_cap, find_in_fixed_point, is_palindrome, substitute


def kernel_numbers(k: int, i_max: int = 64) -> list[int]:
    """r_0 = 0, r_1..r_k = 1, then the k-term recurrence with the -(k-2) correction."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if i_max < 0:
        raise ValueError(f"i_max must be >= 0, got {i_max}")
    values = [0] + [1] * min(k, i_max)
    for i in range(k + 1, i_max + 1):
        values.append(sum(values[i - j] for j in range(1, k)) + 2 * values[i - k] - (k - 2))
    return values


def _build_words(k: int, i_max: int, cap: int | None, literal_parity: bool) -> list[Word]:
    limit = active_cap(cap)
    lengths = kernel_numbers(k, i_max)
    if lengths and max(lengths) > limit:
        raise CapExceeded(max(lengths), limit)
    words = [Word(k)]
    for i in range(1, min(k, i_max) + 1):
        words.append(Word(k, bytes([i - 1])))
    if i_max >= k + 1:
        words.append(Word(k, b"\x00\x00\x00"))
    if i_max >= k + 2:
        words.append(Word(k, b"\x01\x00\x01\x00\x01"))
    for i in range(k + 3, i_max + 1):
        image = substitute(words[i - 1])
        append = (i % 2 == 1) if literal_parity else (i % k == 1)
        words.append(image + Word(k, b"\x00") if append else Word(k, image.letters[1:]))
    return words


@dataclass(frozen=True)
class KernelTable:
    """Kernel numbers and words up to an index bound."""

    k: int
    r: tuple[int, ...]
    words: tuple[Word, ...]
    literal_parity: bool = False
    length_mismatches: tuple[int, ...] = field(default=())

    @classmethod
    def build(
        cls, k: int, i_max: int, cap: int | None = None, literal_parity: bool = False
    ) -> "KernelTable":
        lengths = kernel_numbers(k, i_max)
        words = _build_words(k, i_max, cap, literal_parity)
        mismatches = tuple(i for i in range(i_max + 1) if len(words[i]) != lengths[i])
        if mismatches and not literal_parity:
            i = mismatches[0]
            raise Falsification(
                f"|R_{i}| = {len(words[i])} but r_{i} = {lengths[i]} for k={k}"
            )
        return cls(k, tuple(lengths), words=tuple(words), literal_parity=literal_parity,
                   length_mismatches=mismatches)

    @property
    def i_max(self) -> int:
        return len(self.words) - 1


def kernel_word(k: int, i: int, cap: int | None = None, literal_parity: bool = False) -> Word:
    if i < 0:
        raise ValueError(f"i must be >= 0, got {i}")
    return _build_words(k, i, cap, literal_parity)[i]


def parity_divergences(k: int, i_max: int) -> list[int]:
    """Indices where the even/odd branch disagrees with the i = 1 (mod k) branch."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return [i for i in range(k + 3, i_max + 1) if (i % 2 == 1) != (i % k == 1)]


def kernel_first_occurrence(k: int, i: int, cap: int | None = None) -> Occurrence:
    """Leftmost occurrence of R_i in the fixed point; a miss within the cap falsifies."""
    target = kernel_word(k, i, cap)
    if len(target) == 0:
        raise ValueError("R_0 is empty and occurs everywhere")
    found = find_in_fixed_point(target, cap)
    if found is None:
        raise Falsification(f"R_{i} not found in the fixed point for k={k} within the cap")
    return found[0]


def binary_kernel_factorization(length_cap: int, cap: int | None = None):
    """For k=2 the fixed point is the bare concatenation of kernel words.

    Yields (i, R_i, start) for every kernel word starting within length_cap,
    verifying each against the naive prefix as it goes; a mismatch raises
    Falsification with the token index and position.
    """
    from .oracle import naive_prefix  # deferred: oracle also drives checks over this module

    if length_cap < 1:
        raise ValueError(f"length_cap must be >= 1, got {length_cap}")
    i_max = 1
    lengths = kernel_numbers(2, 1)
    starts = [None, 1]
    while starts[i_max] <= length_cap:
        i_max += 1
        lengths = kernel_numbers(2, i_max)
        starts.append(starts[i_max - 1] + lengths[i_max - 1])
    total = starts[i_max] - 1
    reference = naive_prefix(2, total, cap)
    table = KernelTable.build(2, i_max - 1, cap)
    for i in range(1, i_max):
        token = table.words[i]
        start = starts[i]
        expected = reference.letters[start - 1 : start - 1 + len(token)]
        if token.letters != expected:
            offset = next(
                idx for idx, (a, b) in enumerate(zip(token.letters, expected)) if a != b
            )
            raise Falsification(
                f"kernel token {i} disagrees with the naive prefix at position {start + offset}"
            )
        yield i, token, start


def is_kernel_palindromic(k: int, i_max: int, cap: int | None = None) -> bool:
    table = KernelTable.build(k, i_max, cap)
    return all(is_palindrome(w) for w in table.words)

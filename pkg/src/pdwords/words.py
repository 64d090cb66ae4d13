"""Finite words over {0..k-1} and the k-period-doubling substitution.

The substitution sends m to 0(m+1) for m < k-1 and k-1 to 00; its fixed
point starting from 0 is the generalized period-doubling sequence.  Words
are stored as bytes, so k is capped at 256, far beyond anything useful.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

DEFAULT_CAP = 1 << 26
CAP_ENV_VAR = "PDWORDS_LENGTH_CAP"


class CapExceeded(RuntimeError):
    """Materializing a word would exceed the length cap."""

    def __init__(self, needed: int, cap: int):
        super().__init__(f"word of {needed} letters exceeds the length cap {cap}")
        self.needed = needed
        self.cap = cap


def active_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{CAP_ENV_VAR} must be positive, got {value}")
    return value


def _guard(needed: int, cap: int | None):
    limit = active_cap(cap)
    if needed > limit:
        raise CapExceeded(needed, limit)


@dataclass(frozen=True)
class Alphabet:
    """The ordered alphabet {0, 1, ..., k-1}."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"alphabet needs k >= 2, got {self.k}")

    @property
    def letters(self) -> range:
        return range(self.k)

    def __contains__(self, m) -> bool:
        return isinstance(m, int) and 0 <= m < self.k


@lru_cache(maxsize=None)
def _valid_bytes(k: int) -> bytes:
    return bytes(range(k))


@dataclass(frozen=True)
class Word:
    """Immutable word over {0..k-1}; letters stored as bytes."""

    k: int
    letters: bytes = b""

    def __post_init__(self):
        if self.k < 2 or self.k > 256:
            raise ValueError(f"k must be in 2..256, got {self.k}")
        if self.letters.translate(None, _valid_bytes(self.k)):
            bad = max(self.letters)
            raise ValueError(f"letter {bad} out of range for alphabet of size {self.k}")

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if other.k != self.k:
            raise ValueError(f"alphabet mismatch: {self.k} vs {other.k}")
        return Word(self.k, self.letters + other.letters)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        shown = self.text() if len(self) <= 40 else self.text()[:37] + "..."
        return f"Word(k={self.k}, {shown!r})"

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(self.k)

    def text(self) -> str:
        """Render as contiguous digits (k <= 10) or comma-separated values; empty word is "-"."""
        if not self.letters:
            return "-"
        if self.k <= 10:
            return "".join(str(m) for m in self.letters)
        return ",".join(str(m) for m in self.letters)

    def to_list(self) -> list[int]:
        return list(self.letters)


WordLike = Union[str, bytes, Iterable[int]]


def word(k: int, spec: WordLike = b"") -> Word:
    """Build a Word from a text form, bytes, or an iterable of letters."""
    if isinstance(spec, Word):
        if spec.k != k:
            raise ValueError(f"alphabet mismatch: {k} vs {spec.k}")
        return spec
    if isinstance(spec, str):
        return parse_word(k, spec)
    if isinstance(spec, bytes):
        return Word(k, spec)
    return Word(k, bytes(spec))


def parse_word(k: int, text: str) -> Word:
    """Inverse of Word.text(): digits for k <= 10, comma-separated otherwise, "-" for empty."""
    text = text.strip()
    if text in ("", "-"):
        return Word(k)
    if k <= 10:
        if not text.isdigit():
            raise ValueError(f"expected digit string for k={k}, got {text!r}")
        return Word(k, bytes(int(c) for c in text))
    try:
        values = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated letters for k={k}, got {text!r}") from None
    return Word(k, bytes(values))


@dataclass(frozen=True)
class Occurrence:
    """An occurrence of a factor: 1-based start position and its length."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1 or self.length < 0:
            raise ValueError(f"bad occurrence ({self.start}, {self.length})")

    @property
    def end(self) -> int:
        return self.start + self.length - 1


def exchange(m: int, k: int) -> int:
    """The letter exchange m -> (m+1) mod k."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 0 <= m < k:
        raise ValueError(f"letter {m} out of range for alphabet of size {k}")
    return (m + 1) % k


@lru_cache(maxsize=None)
def _exchange_table(k: int) -> bytes:
    return bytes((m + 1) % k if m < k else 0 for m in range(256))


def substitute(w: Word) -> Word:
    """Apply the substitution letterwise: each m becomes 0 followed by (m+1) mod k."""
    exchanged = w.letters.translate(_exchange_table(w.k))
    out = bytearray(2 * len(exchanged))
    out[1::2] = exchanged
    return Word(w.k, bytes(out))


def mirror_substitute(w: Word) -> Word:
    """The reversed-image substitution: each m becomes (m+1) mod k followed by 0."""
    exchanged = w.letters.translate(_exchange_table(w.k))
    out = bytearray(2 * len(exchanged))
    out[0::2] = exchanged
    return Word(w.k, bytes(out))


@lru_cache(maxsize=8)
def _prefix_word(k: int, n: int) -> Word:
    w = Word(k, b"\x00")
    for _ in range(n):
        w = substitute(w)
    return w


def iterate(k: int, n: int, cap: int | None = None) -> Word:
    """The n-th substitution power applied to 0; a prefix of the fixed point, length 2^n."""
    if n < 0:
        raise ValueError(f"iteration count must be >= 0, got {n}")
    _guard(1 << n, cap)
    return _prefix_word(k, n)


def prefix(k: int, length: int, cap: int | None = None) -> Word:
    """The first `length` letters of the fixed point."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return Word(k)
    _guard(length, cap)
    n = (length - 1).bit_length()
    return Word(k, iterate(k, n, cap).letters[:length])


def letter_at(k: int, index: int) -> int:
    """Random access into the fixed point, 0-based.

    Even positions hold 0 and position 2i+1 holds the exchange of position i,
    so the letter is the number of trailing 1-bits of the index, mod k.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if index < 0:
        raise ValueError(f"index must be >= 0, got {index}")
    trailing_ones = ((index + 1) & ~index).bit_length() - 1
    return trailing_ones % k


def mirror(w: Word) -> Word:
    return Word(w.k, w.letters[::-1])


def is_palindrome(w: Word) -> bool:
    return w.letters == w.letters[::-1]


def lcp(a: Word, b: Word) -> Word:
    """Longest common prefix of two words over the same alphabet."""
    if a.k != b.k:
        raise ValueError(f"alphabet mismatch: {a.k} vs {b.k}")
    x, y = a.letters, b.letters
    n = min(len(x), len(y))
    if x[:n] == y[:n]:
        return Word(a.k, x[:n])
    # prefixes agree at lo, differ at hi
    lo, hi = 0, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if x[:mid] == y[:mid]:
            lo = mid
        else:
            hi = mid
    return Word(a.k, x[:lo])


def first_mismatch(a: Word, b: Word) -> int | None:
    """1-based position of the first difference, None if equal."""
    if a.letters == b.letters:
        return None
    common = len(lcp(a, b))
    return common + 1


def occurrences(pattern: Word, text: Word) -> list[Occurrence]:
    """All (possibly overlapping) occurrences of pattern in text, ascending 1-based starts."""
    if pattern.k != text.k:
        raise ValueError(f"alphabet mismatch: {pattern.k} vs {text.k}")
    if len(pattern) == 0:
        raise ValueError("pattern must be nonempty")
    out = []
    pos = text.letters.find(pattern.letters)
    while pos != -1:
        out.append(Occurrence(pos + 1, len(pattern)))
        pos = text.letters.find(pattern.letters, pos + 1)
    return out


def slice_word(w: Word, i: int, j: int) -> Word:
    """1-based inclusive slice w[i..j]; j = i-1 gives the empty word."""
    if j == i - 1:
        if not 1 <= i <= len(w) + 1:
            raise ValueError(f"empty slice [{i}, {j}] out of range for length {len(w)}")
        return Word(w.k)
    if not (1 <= i <= j <= len(w)):
        raise ValueError(f"slice [{i}, {j}] out of range for length {len(w)}")
    return Word(w.k, w.letters[i - 1 : j])


def concat(k: int, parts: Iterable[Word]) -> Word:
    pieces = []
    for part in parts:
        if part.k != k:
            raise ValueError(f"alphabet mismatch: {k} vs {part.k}")
        pieces.append(part.letters)
    return Word(k, b"".join(pieces))


def find_in_fixed_point(pattern: Word, cap: int | None = None):
    """Leftmost occurrence of pattern in the fixed point.

    Searches doubling prefix windows; the leftmost position is stable under
    window growth.  Returns (Occurrence, window exponent) or None once the
    window would exceed the cap.
    """
    if len(pattern) == 0:
        raise ValueError("pattern must be nonempty")
    limit = active_cap(cap)
    depth = max(2, (len(pattern) - 1).bit_length())
    while (1 << depth) <= limit:
        window = iterate(pattern.k, depth, cap)
        pos = window.letters.find(pattern.letters)
        if pos != -1:
            return Occurrence(pos + 1, len(pattern)), depth
        depth += 1
    return None

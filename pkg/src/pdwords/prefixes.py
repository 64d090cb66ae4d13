"""Palindromic prefixes and product decompositions of the fixed point.

W_n is the n-th substitution power of 0 and p_n the palindromic prefix with
|p_n| = 2^n - 1.  The two are tied together by W_n = p_n + (n mod k) and by
p_{n+1} = p_n (n mod k) p_n, which is also what the substitution route
s(p_n) + 0 produces; every builder here checks both routes against each
other and raises Falsification when they disagree.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import lru_cache

from .reports import Falsification, VerificationReport, failed, out_of_domain, passed
from .words import (
    CapExceeded,
    Word,
    active_cap,
    concat,
    find_in_fixed_point,
    first_mismatch,
    is_palindrome,
    iterate,
    lcp,
    mirror,
    substitute,
    word,
)


@dataclass(frozen=True)
class PrefixEntry:
    n: int
    W: Word
    p: Word
    theta: int
    w: int


@dataclass(frozen=True)
class PrefixFamily:
    k: int
    entries: tuple[PrefixEntry, ...]

    def __getitem__(self, n: int) -> PrefixEntry:
        return self.entries[n]

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def n_max(self) -> int:
        return len(self.entries) - 1


def build_prefix_family(k: int, n_max: int, cap: int | None = None) -> PrefixFamily:
    """Build W_n and p_n for n = 0..n_max, cross-checking the two p recurrences."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    limit = active_cap(cap)
    if (1 << n_max) > limit:
        raise CapExceeded(1 << n_max, limit)
    entries = []
    W = Word(k, b"\x00")
    p = Word(k)
    for n in range(n_max + 1):
        theta = n % k
        theta_word = Word(k, bytes([theta]))
        if W != p + theta_word:
            raise Falsification(f"W_{n} != p_{n} + {theta} for k={k}")
        entries.append(PrefixEntry(n, W, p, theta, 1 << n))
        doubled = p + theta_word + p
        substituted = substitute(p) + Word(k, b"\x00")
        if doubled != substituted:
            raise Falsification(
                f"p_{n + 1} disagrees between doubling and substitution routes for k={k}"
            )
        p = doubled
        W = substitute(W)
    return PrefixFamily(k, tuple(entries))


def doubling_numbers(k: int, m_max: int) -> list[int]:
    """Lengths w_m from the k-term recurrence, seeded with 2^j for j < k."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    values = [1 << j for j in range(min(k, m_max + 1))]
    for m in range(k, m_max + 1):
        values.append(sum(values[m - j] for j in range(1, k)) + 2 * values[m - k])
    return values


def letter_variant(k: int, n: int, m: int, cap: int | None = None) -> Word:
    """The n-th substitution power of the letter m, for m in 1..k-1.

    Asserts the one-step split: it equals W_{n-1} followed by the variant of
    m+1 when m <= k-2, and W_{n-1} twice when m = k-1.
    """
    if not 1 <= m <= k - 1:
        raise ValueError(f"m must be in 1..{k - 1}, got {m} (m=0 is the plain iterate)")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    result = _letter_power(k, n, m, cap)
    if n >= 1:
        head = iterate(k, n - 1, cap)
        tail = head if m == k - 1 else _letter_power(k, n - 1, m + 1, cap)
        if result != head + tail:
            raise Falsification(f"split of s^{n}({m}) failed for k={k}")
    return result


def _letter_power(k: int, n: int, m: int, cap: int | None = None) -> Word:
    limit = active_cap(cap)
    if (1 << n) > limit:
        raise CapExceeded(1 << n, limit)
    w = Word(k, bytes([m]))
    for _ in range(n):
        w = substitute(w)
    return w


def check_descending_product(k: int, n: int, cap: int | None = None) -> VerificationReport:
    """W_n = W_{n-1} W_{n-2} ... W_0 followed by the letter n mod k."""
    started = time.perf_counter()
    params = {"k": k, "n": n}
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    family = _family(k, n, cap)
    product = concat(k, [family[j].W for j in range(n - 1, -1, -1)]) + Word(k, bytes([n % k]))
    position = first_mismatch(product, family[n].W)
    if position is None:
        return passed("descending_product", params, started)
    return failed("descending_product", params, started, mismatch=position)


def check_mirror_product(k: int, depth: int, cap: int | None = None) -> VerificationReport:
    """The mirrors of W_0..W_depth concatenate to p_{depth+1}, a fixed-point prefix."""
    started = time.perf_counter()
    params = {"k": k, "depth": depth}
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    family = _family(k, depth + 1, cap)
    product = concat(k, [mirror(family[j].W) for j in range(depth + 1)])
    expected = family[depth + 1].p
    position = first_mismatch(product, expected)
    if position is not None:
        return failed("mirror_product", params, started, mismatch=position)
    window = iterate(k, depth + 1, cap)
    if product.letters != window.letters[: len(product)]:
        return failed(
            "mirror_product", params, started,
            mismatch=first_mismatch(product, Word(k, window.letters[: len(product)])),
        )
    return passed("mirror_product", params, started)


def check_product_factor(
    k: int, n: int, l: int, search_depth: int | None = None, cap: int | None = None
):
    """W_n W_l occurs in the fixed point; returns its leftmost Occurrence.

    search_depth is a window-exponent hint and must be at least n+l+k+2; the
    search itself widens by doubling until the cap, and exhausting the cap
    without an occurrence is a falsification, never a silent miss.
    """
    floor = n + l + k + 2
    if search_depth is None:
        search_depth = floor
    if search_depth < floor:
        raise ValueError(f"search_depth must be >= {floor}, got {search_depth}")
    pattern = iterate(k, n, cap) + iterate(k, l, cap)
    found = find_in_fixed_point(pattern, cap)
    if found is None:
        raise Falsification(
            f"W_{n} W_{l} not found in the fixed point for k={k} within the cap"
        )
    occurrence, _ = found
    return occurrence


def check_permuted_product_lcp(
    k: int,
    n: int,
    i: int,
    cap: int | None = None,
    second_ascending: bool | None = None,
) -> VerificationReport:
    """Longest common prefix of a permuted product with W_n is exactly p_{n-i}.

    The candidate is W_{n-(i+1)} ... W_{n-k} (descending), then W_{n-1}, then
    the block W_{n-i} ... W_{n-2}; that block is ascending for i = 1 and
    descending otherwise, and the LCP is decided before it is consumed, so
    both orders are accepted and give the same answer.  Instances that would
    need W at a negative index are reported out-of-domain.
    """
    started = time.perf_counter()
    params = {"k": k, "n": n, "i": i}
    if not 1 <= i <= k - 1:
        raise ValueError(f"i must be in 1..{k - 1}, got {i}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n - k < 0:
        params["reason"] = f"needs W at negative index {n - k}"
        return out_of_domain("permuted_product_lcp", params, started)
    family = _family(k, n, cap)
    first = [family[j].W for j in range(n - (i + 1), n - k - 1, -1)]
    second_set = [n - 2, n - 1] if i == 1 else list(range(n - i, n - 1))
    ascending = (i < 2) if second_ascending is None else second_ascending
    second = second_set if ascending else list(reversed(second_set))
    candidate = concat(k, first + [family[n - 1].W] + [family[j].W for j in second])
    common = lcp(candidate, family[n].W)
    expected = family[n - i].p
    if common == expected:
        return passed("permuted_product_lcp", params, started)
    return failed(
        "permuted_product_lcp", params, started,
        mismatch=len(common) + 1,
        counterexample=f"lcp length {len(common)}, claimed {len(expected)}",
    )


def _factor_depth(v: Word, depth: int | None) -> int:
    if depth is not None:
        return depth
    return max(12, (max(len(v), 1) - 1).bit_length() + 6)


def _require_factor(v: Word, depth: int | None, cap: int | None):
    exponent = _factor_depth(v, depth)
    window = iterate(v.k, exponent, cap)
    if window.letters.find(v.letters) == -1:
        raise ValueError(
            f"{v.text()!r} is not a factor of the first 2^{exponent} letters; "
            "pass a larger depth if it should occur further out"
        )


def palindrome_equivalence(
    k: int, v: Word | str, depth: int | None = None, cap: int | None = None
) -> tuple[bool, bool, bool]:
    """Palindromicity of v, of s(v)+0, and of s(v) with its leading 0 removed.

    For factors longer than two letters the three answers always agree; this
    returns the raw triple so the caller can see that for itself.
    """
    v = word(k, v)
    if len(v) <= 2:
        raise ValueError(f"need |v| > 2, got {len(v)}")
    _require_factor(v, depth, cap)
    image = substitute(v)
    appended = image + Word(k, b"\x00")
    stripped = Word(k, image.letters[1:])
    return (is_palindrome(v), is_palindrome(appended), is_palindrome(stripped))


def desubstitute_palindrome(
    k: int, v: Word | str, depth: int | None = None, cap: int | None = None
) -> tuple[Word, str]:
    """Invert the substitution on a palindromic factor v (v != "00").

    An odd run of leading zeros means v is s(v') + 0 ("append-zero" form), an
    even run means v is s(v') minus its leading 0 ("strip-zero" form).  The
    preimage v' is returned with the form tag and is itself checked to be a
    palindromic factor; any failure of that is a falsification, since the
    construction guarantees it.
    """
    v = word(k, v)
    if len(v) == 0:
        raise ValueError("v must be nonempty")
    if v.letters == b"\x00\x00":
        raise ValueError('v = "00" has no palindromic preimage form')
    if not is_palindrome(v):
        raise ValueError(f"{v.text()!r} is not a palindrome")
    _require_factor(v, depth, cap)
    stripped = v.letters.lstrip(b"\x00")
    leading = len(v) - len(stripped)
    if leading % 2 == 1:
        body, form = v.letters[:-1], "append-zero"
    else:
        body, form = b"\x00" + v.letters, "strip-zero"
    if len(body) % 2 == 1:
        raise Falsification(f"no preimage: odd body length for {v.text()!r} (k={k})")
    if body[0::2].translate(None, b"\x00"):
        raise Falsification(f"no preimage: image positions not all 0 in {v.text()!r} (k={k})")
    preimage = Word(k, body[1::2].translate(_inverse_exchange_table(k)))
    if not is_palindrome(preimage):
        raise Falsification(f"preimage {preimage.text()!r} of {v.text()!r} is not a palindrome")
    if len(preimage) > 0:
        _require_factor(preimage, depth, cap)
    return preimage, form


def _inverse_exchange_table(k: int) -> bytes:
    return bytes((m - 1) % k if m < k else 0 for m in range(256))


def sample_factors(
    k: int,
    count: int,
    min_len: int = 3,
    max_len: int = 50,
    depth: int = 13,
    seed: int = 0,
    cap: int | None = None,
) -> list[Word]:
    """Deterministic sample of factors, drawn as slices of a fixed-point prefix."""
    rng = random.Random(seed)
    window = iterate(k, depth, cap)
    out = []
    for _ in range(count):
        length = rng.randint(min_len, min(max_len, len(window)))
        start = rng.randint(0, len(window) - length)
        out.append(Word(k, window.letters[start : start + length]))
    return out


def _family(k: int, n_max: int, cap: int | None) -> PrefixFamily:
    return _family_cached(k, n_max, active_cap(cap))


@lru_cache(maxsize=8)
def _family_cached(k: int, n_max: int, limit: int) -> PrefixFamily:
    return build_prefix_family(k, n_max, limit)

#!/usr/bin/env python3
"""Regenerate tests/golden/oracle.tsv from definitional computations only.

Deliberately self-contained: no pdwords import.  Every value below is
recomputed from the substitution's definition with plain letterwise
expansion, leftmost substring search, and exhaustive preimage search, so
the golden file stays independent of the library it later judges.

Usage: python3 scripts/make_goldens.py
"""
from __future__ import annotations

import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden" / "oracle.tsv"


def expand(k: int, length: int) -> list[int]:
    # fixed point of 0 -> 0,1; m -> 0,(m+1) mod k; iterate letterwise
    seq = [0]
    while len(seq) < length:
        seq = [x for m in seq for x in (0, (m + 1) % k)]
    return seq[:length]


def text(letters: list[int]) -> str:
    return "".join(str(m) for m in letters) if letters else "-"


def kernel_words(k: int, i_max: int) -> list[list[int]]:
    words: list[list[int]] = [[]]
    for i in range(1, min(k, i_max) + 1):
        words.append([i - 1])
    for i in range(k + 1, i_max + 1):
        image = [x for m in words[i - 1] for x in (0, (m + 1) % k)]
        words.append(image + [0] if i % k == 1 else image[1:])
    return words


def first_start(pattern: list[int], prefix: list[int]) -> int:
    # 1-based leftmost occurrence; grows nothing, caller sizes the prefix
    pos = text(prefix).find(text(pattern))
    if pos < 0:
        raise SystemExit(f"pattern not found; widen the prefix ({text(pattern)[:40]}...)")
    return pos + 1


def all_starts(pattern: list[int], t: list[int]) -> list[int]:
    hay, needle, found, pos = text(t), text(pattern), [], 0
    while True:
        pos = hay.find(needle, pos)
        if pos < 0:
            return found
        found.append(pos + 1)
        pos += 1


def classify_gaps(starts: list[int], n: int, t: list[int]):
    # consecutive occurrences: adjacent / separated (positive letters between)
    # / overlapped (inverse letters shared)
    out = []
    for i, j in zip(starts, starts[1:]):
        if i + n == j:
            out.append(("adjacent", "positive", []))
        elif i + n < j:
            out.append(("separated", "positive", t[i + n - 1 : j - 1]))
        else:
            out.append(("overlapped", "inverse", t[j - 1 : i + n - 1]))
    return out


def desubstitute_forms(k: int, v: list[int]) -> list[tuple[str, str]]:
    def decode(w: list[int]) -> list[int] | None:
        if len(w) % 2:
            return None
        letters = []
        for a, b in zip(w[::2], w[1::2]):
            if a != 0:
                return None
            letters.append((b - 1) % k)
        return letters

    forms = []
    pre = decode([0] + v)
    if pre is not None:
        forms.append((text(pre), "strip-zero"))
    if v and v[-1] == 0:
        pre = decode(v[:-1])
        if pre is not None:
            forms.append((text(pre), "append-zero"))
    return forms


def main() -> None:
    rows: list[tuple[str, ...]] = []

    # binary comparison: first 1-based position where reducing letters
    # mod k-1 stops matching the k=2 sequence
    base = expand(2, 64)
    for k in range(3, 9):
        seq = expand(k, 64)
        pos = next(i + 1 for i in range(64) if seq[i] % (k - 1) != base[i])
        rows.append(("congruence_mismatch", str(k), "first_position", str(pos)))

    # kernel word first occurrences, and the gap words between them
    starts: dict[tuple[int, int], int] = {}
    for k in range(2, 6):
        words = kernel_words(k, 12)
        prefix = expand(k, 1 << 13)
        for i in range(1, 13):
            starts[(k, i)] = first_start(words[i], prefix)
            rows.append(("kernel_start", str(k), f"i={i}", str(starts[(k, i)])))
    for k, n_hi in ((3, 7), (4, 8)):
        words = kernel_words(k, n_hi + 1)
        prefix = expand(k, 1 << 10)
        for n in range(1, n_hi + 1):
            lo = starts[(k, n)] + len(words[n]) - 1
            hi = starts[(k, n + 1)] - 1
            rows.append(("gap_word", str(k), f"n={n}", text(prefix[lo:hi])))

    # first gap index where the doubling-plus-one extrapolation disagrees
    # with the lengths the occurrence structure forces
    for k in range(3, 9):
        i_hi = 2 * k + 2
        words = kernel_words(k, i_hi)
        prefix = expand(k, 1 << i_hi)
        pos = [0] + [first_start(words[i], prefix) for i in range(1, i_hi + 1)]
        g = [0] * i_hi
        for n in range(1, i_hi):
            g[n] = pos[n + 1] - pos[n] - len(words[n])
        claimed_base = g[k + 1] + 1
        for n in range(k + 1, i_hi):
            claimed = claimed_base * (1 << (n - (k + 1))) - 1
            if claimed != g[n]:
                rows.append((
                    "closed_form_divergence", str(k), f"n={n}",
                    f"claimed={claimed} true={g[n]}",
                ))
                break
        else:
            raise SystemExit(f"no divergence found for k={k}; widen the scan")

    # worked occurrence example
    rows.append((
        "occurrences", "2", "pattern=00 text=010001000",
        ",".join(map(str, all_starts([0, 0], [0, 1, 0, 0, 0, 1, 0, 0, 0]))),
    ))

    # gap scans of a repeated factor inside a fixed prefix
    for k, factor, depth in ((2, [0, 0], 4), (3, [0, 1, 0, 2], 4)):
        window = expand(k, 1 << depth)
        occ = all_starts(factor, window)
        gaps = classify_gaps(occ, len(factor), window)
        rows.append((
            "factor_gaps", str(k), f"factor={text(factor)} depth={depth}",
            "g0=%s; occ=%s; gaps=%s" % (
                text(window[: occ[0] - 1]),
                ",".join(map(str, occ)),
                ",".join(f"{rel}:{ori}:{text(w)}" for rel, ori, w in gaps),
            ),
        ))

    # exhaustive desubstitution of a palindromic factor
    forms = desubstitute_forms(2, [0, 0, 1, 0, 0, 0, 1, 0, 0])
    rows.append((
        "desubstitute", "2", "word=001000100",
        ",".join(f"{w}:{form}" for w, form in forms),
    ))

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w") as fh:
        fh.write("# generated by: python3 scripts/make_goldens.py\n")
        fh.write("# self-contained definitional recomputation; do not edit by hand\n")
        fh.write("kind\tk\tkey\tvalue\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(f"wrote {OUT} ({len(rows)} rows)")


if __name__ == "__main__":
    main()

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdwords import (
    DOCUMENTED_CLOSED_FORM_DIVERGENCE,
    Falsification,
    Gap,
    GapTable,
    Word,
    assemble_from_kernel_gaps,
    check_gap_recurrence,
    check_kernel_expansion,
    check_kernel_overlap_identity,
    closed_form_gap_length,
    concat,
    factor_gaps,
    factorize_stream,
    gap_index_divergences,
    gap_length,
    gap_lengths,
    kernel_gap,
    kernel_numbers,
    letter_variant,
    prefix,
    word,
)


def test_gap_words_golden(golden):
    for k, n_hi in ((3, 7), (4, 8)):
        for n in range(1, n_hi + 1):
            assert kernel_gap(k, n).text() == golden[("gap_word", k, f"n={n}")], (k, n)


def test_gap_word_examples():
    assert kernel_gap(3, 4).text() == "1020"
    assert kernel_gap(3, 5).text() == "020100010"
    assert kernel_gap(4, 5).text() == "102010301020"
    assert kernel_gap(4, 6).text() == "0201030102010001020103010"
    assert kernel_gap(3, 1).text() == "-"
    with pytest.raises(ValueError):
        kernel_gap(3, -1)


def test_gap_words_k2_all_empty():
    table = GapTable.build(2, 12)
    assert all(len(w) == 0 for w in table.words)
    assert gap_lengths(2, 12) == [0] * 13


def test_gap_lengths_frozen_rows():
    assert gap_lengths(3, 8) == [0, 0, 1, 2, 4, 9, 18, 36, 73]
    assert gap_lengths(4, 8) == [0, 0, 1, 3, 6, 12, 25, 51, 102]
    with pytest.raises(ValueError):
        gap_lengths(1, 4)
    with pytest.raises(ValueError):
        gap_lengths(3, -1)


def test_gap_lengths_match_words():
    for k in range(3, 7):
        table = GapTable.build(k, 12)
        assert list(table.g) == gap_lengths(k, 12)
        assert table.n_max == 12


def test_gap_length_routes():
    assert gap_length(4, 7) == 51
    assert gap_length(4, 1) == 0
    assert gap_length(3, 6) == 18
    assert gap_length(3, 30) == gap_lengths(3, 30)[30]
    with pytest.raises(ValueError):
        gap_length(2, 3)
    with pytest.raises(ValueError):
        gap_length(3, 0)


def test_closed_form_window():
    # the extrapolation is exact while every step appends a letter
    for k in range(3, 7):
        for n in range(k + 1, 2 * k):
            assert closed_form_gap_length(k, n) == gap_lengths(k, n)[n]
    with pytest.raises(ValueError):
        closed_form_gap_length(3, 3)
    with pytest.raises(ValueError):
        closed_form_gap_length(2, 5)


def test_closed_form_divergence_golden(golden):
    # from the second cycle on the extrapolation overshoots; the first
    # divergence index and both values are frozen from the occurrence scan
    for k in range(3, 9):
        n = DOCUMENTED_CLOSED_FORM_DIVERGENCE[k]
        assert n == 2 * k
        claimed, true = golden[("closed_form_divergence", k, f"n={n}")].split(" ")
        assert closed_form_gap_length(k, n) == int(claimed.removeprefix("claimed="))
        assert gap_lengths(k, n)[n] == int(true.removeprefix("true="))
        # every index before it agrees
        for m in range(k + 1, n):
            assert closed_form_gap_length(k, m) == gap_lengths(k, m)[m]


def test_literal_gap_indexing_divergence():
    # the unshifted indexing is one step ahead from the very first gap
    divergences = gap_index_divergences(3, 6)
    assert 0 not in divergences
    assert divergences[0] == 1
    literal = GapTable.build(3, 3, literal_index=True)
    assert literal.words[1].text() == "0"  # calibrated table has the empty word here
    assert kernel_gap(3, 1, literal_index=True).text() == "0"


def test_assemble_from_kernel_gaps():
    w3, companion3 = assemble_from_kernel_gaps(3, 3)
    assert w3.text() == "01020100"
    assert companion3 == letter_variant(3, 3, 1)
    w4, _ = assemble_from_kernel_gaps(3, 4)
    assert w4.text() == "0102010001020101"
    w44, _ = assemble_from_kernel_gaps(4, 4)
    assert w44.text() == "0102010301020100"
    with pytest.raises(ValueError):
        assemble_from_kernel_gaps(2, 3)
    with pytest.raises(ValueError):
        assemble_from_kernel_gaps(3, 0)


def test_assemble_sweep():
    for k in (3, 4, 5):
        for n in range(1, 11):
            w, companion = assemble_from_kernel_gaps(k, n)
            assert len(w) == 1 << n
            assert len(companion) == 1 << n


def test_kernel_overlap_identity():
    report = check_kernel_overlap_identity(3, 7)
    assert report.status == "pass"
    for k in (3, 4, 5):
        for n in range(k + 1, 12):
            assert check_kernel_overlap_identity(k, n).status == "pass", (k, n)
    with pytest.raises(ValueError):
        check_kernel_overlap_identity(3, 3)
    with pytest.raises(ValueError):
        check_kernel_overlap_identity(2, 5)


def test_kernel_expansion():
    # n = k+1 is the smallest admissible index and must work, not error
    assert check_kernel_expansion(3, 4).status == "pass"
    assert check_kernel_expansion(3, 7).status == "pass"
    for k in (3, 4, 5):
        for n in range(k + 1, 12):
            assert check_kernel_expansion(k, n).status == "pass", (k, n)
    with pytest.raises(ValueError):
        check_kernel_expansion(3, 3)


def test_gap_recurrence():
    report, star = check_gap_recurrence(3, 5)
    assert report.status == "pass"
    assert star.word.text() == "20102"  # first r_5 letters of R_6
    report, _ = check_gap_recurrence(4, 6)
    assert report.status == "pass"
    assert gap_length(4, 6) == 25
    report, _ = check_gap_recurrence(4, 5)
    assert report.status == "pass"
    for k in (3, 4, 5):
        for n in range(k + 1, 12):
            report, star = check_gap_recurrence(k, n)
            assert report.status == "pass", (k, n)
            bump = 1 if n % k == 0 else 0
            assert len(star.word) == kernel_numbers(k, n)[n] + bump
    with pytest.raises(ValueError):
        check_gap_recurrence(3, 3)


def test_factor_gaps_golden(golden):
    for k, factor, depth in ((2, "00", 4), (3, "0102", 4)):
        scan = factor_gaps(k, factor, depth)
        g0, occ, gaps = golden[("factor_gaps", k, f"factor={factor} depth={depth}")].split("; ")
        assert scan.g0.text() == g0.removeprefix("g0=")
        assert [o.start for o in scan.occurrences] == [
            int(s) for s in occ.removeprefix("occ=").split(",")
        ]
        expected = [item.split(":") for item in gaps.removeprefix("gaps=").split(",")]
        assert [(g.relation, g.orientation, g.word.text()) for g in scan.gaps] == [
            (rel, ori, text) for rel, ori, text in expected
        ]
        assert scan.window == depth


def test_factor_gaps_domain():
    with pytest.raises(ValueError):
        factor_gaps(3, "", 4)
    # the whole prefix occurs only once, so no gap is defined
    whole = prefix(3, 16).text()
    with pytest.raises(ValueError, match="increase depth"):
        factor_gaps(3, whole, 4)


def test_gap_record_validation():
    gap = Gap(word(3, "01"))
    assert gap.relation == "separated"
    assert Gap(Word(3)).relation == "adjacent"
    assert Gap(word(3, "0"), "inverse").relation == "overlapped"
    with pytest.raises(ValueError):
        Gap(word(3, "0"), "sideways")
    with pytest.raises(ValueError):
        Gap(Word(3), "inverse")


FROZEN_STREAM_K3 = [
    ("kernel", 1, 1, "0"),
    ("gap", 1, 2, "-"),
    ("kernel", 2, 2, "1"),
    ("gap", 2, 3, "0"),
    ("kernel", 3, 4, "2"),
    ("gap", 3, 5, "01"),
    ("kernel", 4, 7, "000"),
    ("gap", 4, 10, "1020"),
    ("kernel", 5, 14, "10101"),
    ("gap", 5, 19, "020100010"),
    ("kernel", 6, 28, "201020102"),
]

FROZEN_STREAM_K4 = [
    ("kernel", 1, 1, "0"),
    ("gap", 1, 2, "-"),
    ("kernel", 2, 2, "1"),
    ("gap", 2, 3, "0"),
    ("kernel", 3, 4, "2"),
    ("gap", 3, 5, "010"),
    ("kernel", 4, 8, "3"),
    ("gap", 4, 9, "010201"),
    ("kernel", 5, 15, "000"),
    ("gap", 5, 18, "102010301020"),
    ("kernel", 6, 30, "10101"),
]


def test_factorize_stream_frozen_tokens():
    got = [
        (t.kind, t.index, t.start, t.word.text())
        for t in factorize_stream(3, 30)
    ]
    assert got == FROZEN_STREAM_K3
    got = [
        (t.kind, t.index, t.start, t.word.text())
        for t in factorize_stream(4, 30)
    ]
    assert got == FROZEN_STREAM_K4


def test_factorize_stream_k2():
    got = [(t.kind, t.index, t.word.text()) for t in factorize_stream(2, 12)]
    assert got == [
        ("kernel", 1, "0"), ("gap", 1, "-"),
        ("kernel", 2, "1"), ("gap", 2, "-"),
        ("kernel", 3, "000"), ("gap", 3, "-"),
        ("kernel", 4, "10101"), ("gap", 4, "-"),
        ("kernel", 5, "00010001000"),
    ]


def test_factorize_stream_start_arithmetic():
    # the n-th kernel token starts right after all earlier kernel words and gaps
    for k in (2, 3, 4, 5):
        r = kernel_numbers(k, 12)
        g = gap_lengths(k, 12)
        expected = {
            n: 1 + sum(r[j] + g[j] for j in range(1, n)) for n in range(1, 12)
        }
        for t in factorize_stream(k, 1 << 10):
            if t.kind == "kernel":
                assert t.start == expected[t.index], (k, t.index)
            assert t.end == t.start + len(t.word) - 1


def test_factorize_stream_tiles_prefix():
    for k in range(2, 7):
        tokens = list(factorize_stream(k, 512))
        tiled = concat(k, [t.word for t in tokens])
        assert tiled.letters == prefix(k, len(tiled)).letters
        assert len(tiled) >= 512
        for a, b in zip(tokens, tokens[1:]):
            assert b.start == a.start + len(a.word)
            assert (a.kind, b.kind) != ("kernel", "kernel")
            assert (a.kind, b.kind) != ("gap", "gap")


def test_factorize_stream_literal_variants_falsify():
    with pytest.raises(Falsification, match="gap token 1"):
        list(factorize_stream(3, 30, literal_index=True))
    # the literal parity branch first misbuilds R_7 for k=4 (start 60)
    with pytest.raises(Falsification, match="kernel token 7"):
        list(factorize_stream(4, 80, literal_parity=True))


def test_factorize_stream_validation():
    with pytest.raises(ValueError):
        list(factorize_stream(3, 0))


@given(st.integers(2, 6), st.integers(1, 400))
def test_factorize_stream_any_cap(k, cap):
    tokens = list(factorize_stream(k, cap))
    # every token that starts within the cap is emitted whole, in order
    assert tokens[0].start == 1
    tiled = concat(k, [t.word for t in tokens])
    assert tiled.letters == prefix(k, len(tiled)).letters
    assert tokens[-1].end + 1 > cap or tokens[-1].start <= cap

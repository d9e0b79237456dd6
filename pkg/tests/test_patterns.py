import itertools
import random

import numpy as np
import pytest

from trichrome.patterns import (
    FILTER_NONE,
    FILTER_PAPER_LEX,
    FILTER_PAPER_LEX_DEDUP,
    IntersectionPattern,
    PatternError,
    SHAPE_333,
    SHAPE_334,
    _dedup_reference,
    apply_cell_perm,
    canonical_form,
    canonical_slices,
    count_survivors,
    enumerate_patterns,
    is_valid,
    lex_value,
    maxlex,
    orbit_words,
    parse_pattern,
    passes_slice_filter,
    pattern_from_cells,
    pattern_from_slices,
    shape_from_name,
    slice_matrix,
    symmetry_group,
)


def latin_square_333():
    return pattern_from_cells(
        SHAPE_333,
        [(i, j, k) for i in range(3) for j in range(3) for k in range(3)
         if (i + j + k) % 3 == 0])


def all_ones(shape):
    return IntersectionPattern(shape, (1 << shape.n_cells) - 1)


def random_pattern(rng, shape):
    return IntersectionPattern(shape, rng.getrandbits(shape.n_cells))


def random_valid(rng, shape):
    while True:
        p = random_pattern(rng, shape)
        if is_valid(p):
            return p


# ---------------------------------------------------------------------------
# Packing and serialisation
# ---------------------------------------------------------------------------

def test_bit_layout():
    p = pattern_from_cells(SHAPE_334, [(1, 2, 3)])
    assert p.word == 1 << ((3 * 1 + 2) * 4 + 3)
    assert p.bit(1, 2, 3) == 1
    assert p.bit(1, 2, 2) == 0


def test_slices_round_trip():
    rng = random.Random(1)
    for shape in (SHAPE_333, SHAPE_334):
        for _ in range(50):
            p = random_pattern(rng, shape)
            assert pattern_from_slices(shape, p.slices()) == p


def test_text_round_trip():
    assert all_ones(SHAPE_333).to_text() == "333:7FFFFFF"
    assert all_ones(SHAPE_334).to_text() == "334:FFFFFFFFF"
    rng = random.Random(2)
    for shape in (SHAPE_333, SHAPE_334):
        for _ in range(20):
            p = random_pattern(rng, shape)
            assert parse_pattern(p.to_text()) == p
    with pytest.raises(PatternError):
        parse_pattern("335:0")
    with pytest.raises(PatternError):
        parse_pattern("333:FFFFFFFFF")
    with pytest.raises(PatternError):
        shape_from_name("433")


# ---------------------------------------------------------------------------
# Lex values
# ---------------------------------------------------------------------------

def test_lex_value_examples():
    assert lex_value(0) == 0
    assert lex_value([[1, 0, 0], [0, 0, 0], [0, 0, 0]]) == 100_000_000
    assert lex_value([[1, 1, 1], [1, 1, 1], [1, 1, 1]]) == 102_030_201
    # anti-diagonal weight ties
    assert lex_value([[0, 0, 1], [0, 0, 0], [0, 0, 0]]) == 100 ** 2
    assert lex_value([[0, 0, 0], [0, 0, 0], [1, 0, 0]]) == 100 ** 2


def _maxlex_oracle(mat):
    best = 0
    for pr in itertools.permutations(range(3)):
        for pc in itertools.permutations(range(3)):
            img = [[mat[pr[i]][pc[j]] for j in range(3)] for i in range(3)]
            best = max(best, sum(img[i][j] * 100 ** (4 - i - j)
                                 for i in range(3) for j in range(3)))
    return best


def test_maxlex_examples_and_oracle():
    assert maxlex(0) == 0
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert maxlex(ident) == 100_010_001
    rng = random.Random(3)
    for _ in range(200):
        s = rng.getrandbits(9)
        mat = slice_matrix(s)
        assert maxlex(s) == _maxlex_oracle(mat)
        assert maxlex(s) >= lex_value(s)


def test_canonical_slice_count():
    # one lex-maximal representative per S3 x S3 orbit of 3x3 0/1 matrices;
    # Burnside gives 36 orbits
    canon = canonical_slices()
    reps = {min(_orbit9(s)) for s in range(512)}
    assert len(reps) == 36
    by_orbit = {}
    for s in canon:
        by_orbit.setdefault(min(_orbit9(s)), []).append(s)
    assert len(by_orbit) == 36


def _orbit9(s):
    from trichrome.patterns import _slice_images
    return set(_slice_images(s))


# ---------------------------------------------------------------------------
# Validity and the slice filter
# ---------------------------------------------------------------------------

def test_is_valid_examples():
    assert is_valid(all_ones(SHAPE_333))
    assert is_valid(all_ones(SHAPE_334))
    assert is_valid(latin_square_333())
    empty_slice0 = pattern_from_slices(SHAPE_333, [0, 511, 511])
    assert not is_valid(empty_slice0)
    no_row2 = pattern_from_cells(SHAPE_333, [(0, j, k) for j in range(3) for k in range(3)]
                                 + [(1, 0, 0)])
    assert not is_valid(no_row2)


def test_slice_filter_examples():
    assert passes_slice_filter(all_ones(SHAPE_333))
    assert passes_slice_filter(all_ones(SHAPE_334))
    # slice 1 lex-heavier than slice 0
    p = pattern_from_slices(SHAPE_333, [0b000000010, 0b000000001, 0])
    assert lex_value(0b1) > lex_value(0b10)
    assert not passes_slice_filter(p)
    # first slice not lex-canonical: single one away from top-left corner
    q = pattern_from_slices(SHAPE_333, [0b000000010, 0, 0])
    assert not passes_slice_filter(q)


@pytest.mark.parametrize("shape", [SHAPE_333, SHAPE_334])
def test_filter_soundness_sampled(shape):
    rng = random.Random(40 + shape.greens)
    group = symmetry_group(shape)
    for _ in range(400):
        p = random_valid(rng, shape)
        assert any(
            passes_slice_filter(IntersectionPattern(shape, apply_cell_perm(p.word, g)))
            for g in group
        ), f"orbit of {p} misses the survivor set"


# ---------------------------------------------------------------------------
# Symmetry group and canonical forms
# ---------------------------------------------------------------------------

def test_group_orders():
    assert len(symmetry_group(SHAPE_333)) == 1296
    assert len(symmetry_group(SHAPE_334)) == 1728
    for shape in (SHAPE_333, SHAPE_334):
        seen = set(symmetry_group(shape))
        assert len(seen) == len(symmetry_group(shape))
        for g in list(seen)[:50]:
            assert sorted(g) == list(range(shape.n_cells))


def test_validity_and_filter_group_invariance():
    rng = random.Random(7)
    for shape in (SHAPE_333, SHAPE_334):
        group = symmetry_group(shape)
        for _ in range(100):
            p = random_pattern(rng, shape)
            g = group[rng.randrange(len(group))]
            q = IntersectionPattern(shape, apply_cell_perm(p.word, g))
            assert is_valid(p) == is_valid(q)


def test_canonical_form_orbit_invariant():
    rng = random.Random(8)
    for shape in (SHAPE_333, SHAPE_334):
        group = symmetry_group(shape)
        for _ in range(30):
            p = random_pattern(rng, shape)
            c = canonical_form(p)
            for _ in range(5):
                g = group[rng.randrange(len(group))]
                q = IntersectionPattern(shape, apply_cell_perm(p.word, g))
                assert canonical_form(q) == c
            assert c in orbit_words(p)


def test_canonical_form_examples():
    assert canonical_form(all_ones(SHAPE_333)) == all_ones(SHAPE_333).word
    assert canonical_form(all_ones(SHAPE_334)) == all_ones(SHAPE_334).word
    ls = latin_square_333()
    canon_words = {canonical_form(IntersectionPattern(SHAPE_333, w))
                   for w in orbit_words(ls)}
    assert len(canon_words) == 1


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _count_valid_oracle(shape):
    """Inclusion-exclusion over empty-row/col/slice events."""
    from math import comb
    k_ = shape.greens
    total = 0
    for a in range(4):
        for b in range(4):
            for c in range(k_ + 1):
                sign = (-1) ** (a + b + c)
                total += (sign * comb(3, a) * comb(3, b) * comb(k_, c)
                          * 2 ** ((3 - a) * (3 - b) * (k_ - c)))
    return total


def test_enumerate_none_matches_inclusion_exclusion_333():
    assert count_survivors(SHAPE_333, FILTER_NONE) == _count_valid_oracle(SHAPE_333)


def test_paper_lex_strictly_smaller():
    none = count_survivors(SHAPE_333, FILTER_NONE)
    lex = count_survivors(SHAPE_333, FILTER_PAPER_LEX)
    assert 0 < lex < none


def test_enumerate_pool_brute_force():
    rng = random.Random(11)
    pool = sorted({rng.getrandbits(9) for _ in range(10)} - {0})
    for shape in (SHAPE_333, SHAPE_334):
        slots = shape.greens
        brute = {"none": set(), "lex": set()}
        for sl in itertools.product(pool, repeat=slots):
            p = pattern_from_slices(shape, list(sl))
            if not is_valid(p):
                continue
            brute["none"].add(p.word)
            if passes_slice_filter(p):
                brute["lex"].add(p.word)
        got_none = [p.word for p in enumerate_patterns(shape, FILTER_NONE, slice_pool=pool)]
        got_lex = [p.word for p in enumerate_patterns(shape, FILTER_PAPER_LEX, slice_pool=pool)]
        assert got_none == sorted(brute["none"])
        assert got_lex == sorted(brute["lex"])
        got_dedup = [p.word for p in
                     enumerate_patterns(shape, FILTER_PAPER_LEX_DEDUP, slice_pool=pool)]
        expect_dedup = sorted(w for w in brute["lex"]
                              if _dedup_reference(IntersectionPattern(shape, w)))
        assert got_dedup == expect_dedup


def test_dedup_keeps_exactly_min_word_survivor_per_orbit():
    rng = random.Random(12)
    for shape in (SHAPE_333, SHAPE_334):
        for _ in range(25):
            p = random_valid(rng, shape)
            survivors = sorted(
                w for w in orbit_words(p)
                if passes_slice_filter(IntersectionPattern(shape, w)))
            assert survivors, "filter soundness"
            kept = [w for w in survivors
                    if _dedup_reference(IntersectionPattern(shape, w))]
            assert kept == [survivors[0]]


def test_all_ones_survives_every_mode():
    for mode in (FILTER_NONE, FILTER_PAPER_LEX, FILTER_PAPER_LEX_DEDUP):
        pool = [511, 0b111100111]
        words = [p.word for p in enumerate_patterns(SHAPE_333, mode, slice_pool=pool)]
        assert all_ones(SHAPE_333).word in words


def test_enumerate_334_none_rejected():
    with pytest.raises(PatternError):
        count_survivors(SHAPE_334, FILTER_NONE)

"""Intersection patterns y_{ijk} for shapes 3x3x3 and 3x3x4.

A pattern records which triples R_i . B_j . G_k of red/blue/green components
are non-empty.  It is packed into one machine word with bit index
(3*i + j)*K + k, K the number of green components, so slice k is the 3x3
binary matrix at bit offset k with stride K.

The module provides validity filtering (no component may be empty), the
lexicographic slice filter used to prune symmetric patterns before solving,
full-symmetry canonical forms, and a vectorised enumerator.  Integer slice
weights 100**(4-i-j) stand in for the fractional weights 100**(-i-j); the
induced ordering is identical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

FILTER_NONE = "none"
FILTER_PAPER_LEX = "paper-lex"
FILTER_PAPER_LEX_DEDUP = "paper-lex+canonical-dedup"
FILTER_MODES = (FILTER_NONE, FILTER_PAPER_LEX, FILTER_PAPER_LEX_DEDUP)


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternShape:
    reds: int
    blues: int
    greens: int

    def __post_init__(self):
        if (self.reds, self.blues) != (3, 3) or self.greens not in (3, 4):
            raise PatternError("only shapes 3x3x3 and 3x3x4 exist")

    @property
    def name(self) -> str:
        return f"{self.reds}{self.blues}{self.greens}"

    @property
    def n_cells(self) -> int:
        return 9 * self.greens

    @property
    def hex_width(self) -> int:
        return (self.n_cells + 3) // 4

    def cell_index(self, i: int, j: int, k: int) -> int:
        return (3 * i + j) * self.greens + k

    def cells(self) -> list[tuple[int, int, int]]:
        k_ = self.greens
        return [(i, j, k) for i in range(3) for j in range(3) for k in range(k_)]


SHAPE_333 = PatternShape(3, 3, 3)
SHAPE_334 = PatternShape(3, 3, 4)


def shape_from_name(name: str) -> PatternShape:
    if name == "333":
        return SHAPE_333
    if name == "334":
        return SHAPE_334
    raise PatternError(f"unknown shape {name!r}")


@dataclass(frozen=True)
class IntersectionPattern:
    shape: PatternShape
    word: int

    def __post_init__(self):
        if not 0 <= self.word < 1 << self.shape.n_cells:
            raise PatternError("pattern word out of range for shape")

    def bit(self, i: int, j: int, k: int) -> int:
        return (self.word >> self.shape.cell_index(i, j, k)) & 1

    def slices(self) -> tuple[int, ...]:
        """The 3x3 slices Y^(k) as 9-bit values, bit 3*i+j for entry (i, j)."""
        k_ = self.shape.greens
        out = []
        for k in range(k_):
            s = 0
            for c in range(9):
                s |= ((self.word >> (c * k_ + k)) & 1) << c
            out.append(s)
        return tuple(out)

    def set_cells(self) -> list[tuple[int, int, int]]:
        return [(i, j, k) for (i, j, k) in self.shape.cells() if self.bit(i, j, k)]

    def to_text(self) -> str:
        return f"{self.shape.name}:{self.word:0{self.shape.hex_width}X}"

    def __str__(self) -> str:
        return self.to_text()


def pattern_from_slices(shape: PatternShape, slices: Sequence[int]) -> IntersectionPattern:
    if len(slices) != shape.greens:
        raise PatternError(f"shape {shape.name} needs {shape.greens} slices")
    word = 0
    for k, s in enumerate(slices):
        if not 0 <= s < 512:
            raise PatternError("slice out of range")
        word |= _spread(s, shape.greens) << k
    return IntersectionPattern(shape, word)


def pattern_from_cells(shape: PatternShape, cells: Iterable[tuple[int, int, int]]) -> IntersectionPattern:
    word = 0
    for i, j, k in cells:
        word |= 1 << shape.cell_index(i, j, k)
    return IntersectionPattern(shape, word)


def parse_pattern(text: str) -> IntersectionPattern:
    try:
        name, hexword = text.split(":")
        shape = shape_from_name(name)
        word = int(hexword, 16)
    except (ValueError, PatternError) as exc:
        raise PatternError(f"cannot parse pattern {text!r}: {exc}") from None
    return IntersectionPattern(shape, word)


def _spread(s: int, k_: int) -> int:
    """Place bit c of the 9-bit slice value at word bit c*k_."""
    w = 0
    for c in range(9):
        if (s >> c) & 1:
            w |= 1 << (c * k_)
    return w


# ---------------------------------------------------------------------------
# Slice-level tables
# ---------------------------------------------------------------------------

_LEX_WEIGHT = [100 ** (4 - i - j) for i in range(3) for j in range(3)]


def lex_value(z) -> int:
    """Integer lex value sum z_ij * 100**(4-i-j).

    `z` is either a 9-bit slice value (bit 3*i+j) or a 3x3 matrix of 0/1.
    """
    s = _as_slice(z)
    return sum(w for c, w in enumerate(_LEX_WEIGHT) if (s >> c) & 1)


def maxlex(z) -> int:
    """Maximum lex value over all 36 row x column permutations of z."""
    s = _as_slice(z)
    return max(lex_value(t) for t in _slice_images(s))


def _as_slice(z) -> int:
    if isinstance(z, (int, np.integer)):
        s = int(z)
        if not 0 <= s < 512:
            raise PatternError("slice value out of range")
        return s
    s = 0
    for i, row in enumerate(z):
        for j, v in enumerate(row):
            if v not in (0, 1):
                raise PatternError("matrix entries must be 0/1")
            s |= v << (3 * i + j)
    return s


def slice_matrix(s: int) -> list[list[int]]:
    return [[(s >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]


_PERMS3 = list(itertools.permutations(range(3)))
_PERMS4 = list(itertools.permutations(range(4)))


def _slice_images(s: int) -> list[int]:
    """All 36 images of a slice under row and column permutations."""
    out = []
    for pr in _PERMS3:
        for pc in _PERMS3:
            t = 0
            for i in range(3):
                for j in range(3):
                    if (s >> (3 * i + j)) & 1:
                        t |= 1 << (3 * pr[i] + pc[j])
            out.append(t)
    return out


def _transpose_slice(s: int) -> int:
    t = 0
    for i in range(3):
        for j in range(3):
            if (s >> (3 * i + j)) & 1:
                t |= 1 << (3 * j + i)
    return t


@lru_cache(maxsize=1)
def slice_tables():
    """Per-slice lookup tables, 512 entries each.

    lexv      -- integer lex value
    maxlexv   -- max lex value over the 36 row/col images
    rows/cols -- 3-bit masks of non-empty rows / columns
    """
    lexv = np.zeros(512, dtype=np.int64)
    maxlexv = np.zeros(512, dtype=np.int64)
    rows = np.zeros(512, dtype=np.uint8)
    cols = np.zeros(512, dtype=np.uint8)
    for s in range(512):
        lexv[s] = lex_value(s)
        r = c = 0
        for i in range(3):
            for j in range(3):
                if (s >> (3 * i + j)) & 1:
                    r |= 1 << i
                    c |= 1 << j
        rows[s] = r
        cols[s] = c
    for s in range(512):
        maxlexv[s] = max(int(lexv[t]) for t in _slice_images(s))
    return lexv, maxlexv, rows, cols


def canonical_slices() -> list[int]:
    """Slices whose lex value attains their maxlex (candidates for Y^(1))."""
    lexv, maxlexv, _, _ = slice_tables()
    return [s for s in range(512) if lexv[s] == maxlexv[s]]


# ---------------------------------------------------------------------------
# Validity and the lexicographic slice filter
# ---------------------------------------------------------------------------

def is_valid(p: IntersectionPattern) -> bool:
    """No empty component: every red i, blue j and green k has a set bit."""
    _, _, rows, cols = slice_tables()
    r = c = 0
    for s in p.slices():
        if s == 0:
            return False
        r |= int(rows[s])
        c |= int(cols[s])
    return r == 7 and c == 7


def passes_slice_filter(p: IntersectionPattern) -> bool:
    """lex(Y^(k)) >= lex(Y^(k+1)) for all k and lex(Y^(1)) = maxlex(Y^(1))."""
    lexv, maxlexv, _, _ = slice_tables()
    sl = p.slices()
    vals = [int(lexv[s]) for s in sl]
    if any(vals[k] < vals[k + 1] for k in range(len(vals) - 1)):
        return False
    return vals[0] == int(maxlexv[sl[0]])


# ---------------------------------------------------------------------------
# Symmetry group and canonical forms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def symmetry_group(shape: PatternShape) -> tuple[tuple[int, ...], ...]:
    """Cell permutations dest[c] of the full symmetry group.

    333: independent relabelling of red/blue/green components composed with
    any permutation of the three colour axes (order 6**3 * 6 = 1296).
    334: relabelling S3 x S3 x S4 composed with the red/blue swap
    (order 6 * 6 * 24 * 2 = 1728).
    """
    k_ = shape.greens
    perms: list[tuple[int, ...]] = []
    kperms = _PERMS3 if k_ == 3 else _PERMS4
    axis_perms = _PERMS3 if k_ == 3 else [(0, 1, 2), (1, 0, 2)]
    for rho in axis_perms:
        for sigma in _PERMS3:
            for tau in _PERMS3:
                for pi in kperms:
                    dest = [0] * shape.n_cells
                    for i in range(3):
                        for j in range(3):
                            for k in range(k_):
                                v = (i, j, k)
                                iv, jv, kv = v[rho[0]], v[rho[1]], v[rho[2]]
                                dest[shape.cell_index(i, j, k)] = shape.cell_index(
                                    sigma[iv], tau[jv], pi[kv])
                    perms.append(tuple(dest))
    return tuple(perms)


def apply_cell_perm(word: int, dest: Sequence[int]) -> int:
    out = 0
    w = word
    while w:
        c = (w & -w).bit_length() - 1
        out |= 1 << dest[c]
        w &= w - 1
    return out


def orbit_words(p: IntersectionPattern) -> set[int]:
    return {apply_cell_perm(p.word, g) for g in symmetry_group(p.shape)}


def canonical_form(p: IntersectionPattern) -> int:
    """Maximum packed word over the full symmetry orbit."""
    return max(apply_cell_perm(p.word, g) for g in symmetry_group(p.shape))


def apply_symmetry(p: IntersectionPattern, g: Sequence[int]) -> IntersectionPattern:
    return IntersectionPattern(p.shape, apply_cell_perm(p.word, g))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------
#
# A pattern is its tuple of slices (s_0, ..., s_{K-1}).  The paper-lex
# filter fixes s_0 to a lex-canonical slice and the rest to lex-non-
# increasing order, so enumeration runs over a canonical s_0, then s_1,
# then a vectorised sweep of the remaining one or two slices.  The
# "canonical-dedup" mode afterwards keeps a survivor only if it is the
# smallest-word paper-lex survivor of its full symmetry orbit, which is
# exactly "first survivor per canonical word" in packed-word order.


@lru_cache(maxsize=None)
def _enum_tables(k_: int):
    lexv, maxlexv, rows, cols = slice_tables()
    nz = np.arange(1, 512, dtype=np.int64)
    order = nz[np.argsort(-lexv[nz], kind="stable")]   # nonzero slices, lex desc
    olex = lexv[order]
    spread = np.zeros(512, dtype=np.uint64)
    for s in range(512):
        spread[s] = _spread(s, k_)
    # first index into `order` whose lex value is <= lexv[s], per slice s
    first_le = np.searchsorted(-olex, -lexv, side="left")
    return order, olex, spread, first_le


def _dedup_reference(p: IntersectionPattern) -> bool:
    """Keep iff p is the minimal-word paper-lex survivor of its orbit."""
    w = p.word
    for g in symmetry_group(p.shape):
        q = apply_cell_perm(p.word, g)
        if q < w and passes_slice_filter(IntersectionPattern(p.shape, q)):
            return False
    return True


def survivor_words_chunk(shape: PatternShape, mode: str, s0: int, s1: int,
                         slice_pool: np.ndarray | None = None) -> np.ndarray:
    """Packed words of all mode-survivors with first slices (s0, s1).

    Validity is always enforced.  `slice_pool` restricts the remaining
    slices to a subset (test hook for miniature universes).
    """
    lexv, maxlexv, rows, cols = slice_tables()
    k_ = shape.greens
    order, olex, spread, first_le = _enum_tables(k_)
    if s0 == 0 or s1 == 0:
        return np.empty(0, dtype=np.uint64)
    paper = mode in (FILTER_PAPER_LEX, FILTER_PAPER_LEX_DEDUP)
    if paper:
        if lexv[s0] != maxlexv[s0] or lexv[s1] > lexv[s0]:
            return np.empty(0, dtype=np.uint64)
        cand = order[first_le[s1]:]
    else:
        cand = np.arange(1, 512, dtype=np.int64)
    if slice_pool is not None:
        pool = np.asarray(sorted(set(int(s) for s in slice_pool)), dtype=np.int64)
        cand = cand[np.isin(cand, pool)]
    need_r = 7 & ~(int(rows[s0]) | int(rows[s1]))
    need_c = 7 & ~(int(cols[s0]) | int(cols[s1]))
    base = np.uint64(int(spread[s0]) | (int(spread[s1]) << 1))

    if k_ == 3:
        ok = ((rows[cand] & need_r) == need_r) & ((cols[cand] & need_c) == need_c)
        s2 = cand[ok]
        words = base | (spread[s2] << np.uint64(2))
    else:
        if paper and slice_pool is None:
            # cand is a suffix of `order`; s3 candidates for each a are the
            # suffix starting where lex values drop to lexv[a] or below
            lo = first_le[cand] - first_le[s1]
            reps = len(cand) - lo
            a = np.repeat(cand, reps)
            idx = (np.concatenate([np.arange(l, len(cand)) for l in lo])
                   if len(cand) else np.empty(0, dtype=np.int64))
            b = cand[idx]
        else:
            a = np.repeat(cand, len(cand))
            b = np.tile(cand, len(cand))
            if paper:
                keep = lexv[b] <= lexv[a]
                a, b = a[keep], b[keep]
        rr = rows[a] | rows[b]
        cc = cols[a] | cols[b]
        ok = ((rr & need_r) == need_r) & ((cc & need_c) == need_c)
        a, b = a[ok], b[ok]
        words = base | (spread[a] << np.uint64(2)) | (spread[b] << np.uint64(3))

    if mode == FILTER_PAPER_LEX_DEDUP and len(words):
        keep = np.fromiter(
            (_dedup_reference(IntersectionPattern(shape, int(w))) for w in words),
            dtype=bool, count=len(words))
        words = words[keep]
    return words


def _pair_iter(shape: PatternShape, mode: str, slice_pool=None) -> Iterator[tuple[int, int]]:
    lexv, maxlexv, _, _ = slice_tables()
    if slice_pool is not None:
        firsts = sorted(set(int(s) for s in slice_pool) - {0})
    else:
        firsts = list(range(1, 512))
    if mode == FILTER_NONE:
        for s0 in firsts:
            for s1 in firsts:
                yield s0, s1
    else:
        for s0 in firsts:
            if lexv[s0] != maxlexv[s0]:
                continue
            for s1 in firsts:
                if lexv[s1] <= lexv[s0]:
                    yield s0, s1


def iter_survivor_batches(shape: PatternShape, mode: str,
                          slice_pool=None) -> Iterator[np.ndarray]:
    if mode not in FILTER_MODES:
        raise PatternError(f"unknown filter mode {mode!r}")
    if mode == FILTER_NONE and shape.greens == 4 and slice_pool is None:
        raise PatternError("unfiltered 3x3x4 enumeration is impractically large; "
                           "use a slice_pool or the paper-lex filter")
    for s0, s1 in _pair_iter(shape, mode, slice_pool):
        words = survivor_words_chunk(shape, mode, s0, s1, slice_pool)
        if len(words):
            yield words


def enumerate_patterns(shape: PatternShape, mode: str = FILTER_PAPER_LEX,
                       slice_pool=None) -> Iterator[IntersectionPattern]:
    """All valid patterns passing `mode`, in increasing packed-word order.

    Materialises the survivor set to sort it; for the full 3x3x4 paper-lex
    space this is hundreds of millions of words, so prefer the batch
    interface for heavy work.
    """
    batches = list(iter_survivor_batches(shape, mode, slice_pool))
    if not batches:
        return iter(())
    words = np.sort(np.concatenate(batches))
    return (IntersectionPattern(shape, int(w)) for w in words)


def count_survivors(shape: PatternShape, mode: str, slice_pool=None) -> int:
    return sum(len(b) for b in iter_survivor_batches(shape, mode, slice_pool))

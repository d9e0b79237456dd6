"""Builders for the counterexample graphs, one per residue class mod 6.

Each construction partitions the vertices into classes V1..Vm and joins
class pairs by complete bipartite bundles.  The bundle tables are decoded
from the figures; a bundle may carry one colour or be shared by two, in
which case its edges alternate round-robin over the ordered colour pair
(lexicographic edge order), so both colours occur whenever the bundle has
at least two edges.  Edges inside a class are red; the verifier confirms
the prose component orders under this policy.

Ranges of validity: the class-size formulas must be non-negative AND the
built graph must actually have all monochromatic components below n/2.
Both give the per-residue minima in _MIN_Q below; smaller n are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .graphs import COLOURS, Colour, ColoredGraph, GraphError
from .patterns import SHAPE_333, IntersectionPattern, pattern_from_cells

R, B, G = Colour.RED, Colour.BLUE, Colour.GREEN


# ---------------------------------------------------------------------------
# Bundle tables (class ids are 1-based; colour tuples are ordered)
# ---------------------------------------------------------------------------

# n = 6q+4, also reused with resized classes for n = 6q+1 and 6q+2
_FIG1_BUNDLES = {
    (2, 3): (R,), (2, 5): (R,), (2, 6): (R,), (5, 6): (R,),
    (4, 7): (R,), (4, 8): (R,), (7, 8): (R,),
    (1, 5): (B,), (1, 7): (B,), (3, 7): (B,), (5, 7): (B,),
    (2, 8): (B,), (4, 6): (B,),
    (1, 6): (G,), (1, 8): (G,), (3, 8): (G,), (6, 8): (G,),
    (4, 5): (G,), (2, 7): (G,),
    (3, 5): (R, B), (1, 3): (B, G), (3, 6): (R, G),
}
_FIG1_NON_EDGES = ((1, 2), (1, 4), (2, 4), (3, 4), (5, 8), (6, 7))

# n = 6q, reused for n = 6q+3
_FIG2_BUNDLES = {
    (1, 2): (R,), (3, 4): (R,), (3, 5): (R,), (4, 5): (R,),
    (2, 4): (B,), (2, 6): (B,), (4, 6): (B,), (1, 3): (B,),
    (1, 5): (G,), (1, 6): (G,), (5, 6): (G,), (2, 3): (G,),
}
_FIG2_NON_EDGES = ((1, 4), (2, 5), (3, 6))

# n = 6q+5
_FIG4_BUNDLES = {
    (1, 7): (R,), (1, 9): (R,), (3, 5): (R,), (4, 7): (R,),
    (7, 9): (R,), (6, 8): (R,),
    (2, 7): (B,), (2, 8): (B,), (5, 7): (B,), (7, 8): (B,),
    (6, 9): (B,), (3, 4): (B,),
    (1, 2): (G,), (1, 5): (G,), (1, 6): (G,), (2, 4): (G,),
    (2, 6): (G,), (4, 5): (G,), (8, 9): (G,),
    (4, 9): (R, B), (5, 8): (R, B), (3, 6): (R, B),
    (5, 6): (R, G), (3, 8): (R, G), (1, 4): (R, G),
    (4, 6): (B, G), (3, 9): (B, G), (2, 5): (B, G),
}
_FIG4_NON_EDGES = ((1, 3), (1, 8), (2, 3), (2, 9), (3, 7), (4, 8), (5, 9), (6, 7))


def _sizes(residue: int, q: int) -> tuple[int, ...]:
    if residue == 0:
        return (q + 1, q + 1, q + 1, q - 1, q - 1, q - 1)
    if residue == 1:
        return (1, 1, q - 3, q - 2, q + 1, q + 1, q + 1, q + 1)
    if residue == 2:
        return (2, 2, q - 4, q - 2, q + 1, q + 1, q + 1, q + 1)
    if residue == 3:
        return (q + 1, q + 1, q + 1, q, q, q)
    if residue == 4:
        return (2, 2, q - 3, q - 1, q + 1, q + 1, q + 1, q + 1)
    if residue == 5:
        return (1, 1, 1, q, q, q, q, q + 1, q + 1)
    raise AssertionError


# Smallest q per residue for which the class sizes are non-negative and the
# verifier passes (for n = 6q and 6q+3 the size formulas allow smaller q,
# but a component then reaches n/2).
_MIN_Q = {0: 3, 1: 3, 2: 4, 3: 1, 4: 3, 5: 0}

_TABLES = {
    0: (_FIG2_BUNDLES, _FIG2_NON_EDGES),
    1: (_FIG1_BUNDLES, _FIG1_NON_EDGES),
    2: (_FIG1_BUNDLES, _FIG1_NON_EDGES),
    3: (_FIG2_BUNDLES, _FIG2_NON_EDGES),
    4: (_FIG1_BUNDLES, _FIG1_NON_EDGES),
    5: (_FIG4_BUNDLES, _FIG4_NON_EDGES),
}


@dataclass(frozen=True)
class ConstructionSpec:
    residue: int
    q: int
    class_sizes: tuple[int, ...]
    bundles: tuple[tuple[tuple[int, int], tuple[Colour, ...]], ...]
    non_edges: tuple[tuple[int, int], ...]
    intra_class_colour_overrides: Mapping[int, Colour]

    @property
    def n(self) -> int:
        return sum(self.class_sizes)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "residue": self.residue,
            "q": self.q,
            "class_sizes": list(self.class_sizes),
            "bundles": [
                {"classes": list(pair), "colours": [c.letter for c in cols]}
                for pair, cols in self.bundles
            ],
            "non_edges": [list(p) for p in self.non_edges],
            "expected_min_degree": expected_min_degree(self.n),
            "expected_max_component": expected_max_component(self.n),
        }


def expected_min_degree(n: int) -> int:
    q, r = divmod(n, 6)
    return {0: 5 * q - 2, 1: 5 * q - 1, 2: 5 * q, 3: 5 * q + 1,
            4: 5 * q + 2, 5: 5 * q + 2}[r]


def expected_max_component(n: int) -> int:
    q, r = divmod(n, 6)
    return {0: 3 * q - 1, 1: 3 * q, 2: 3 * q, 3: 3 * q + 1,
            4: 3 * q + 1, 5: 3 * q + 2}[r]


def min_supported_n(residue: int) -> int:
    return 6 * _MIN_Q[residue] + residue


def spec_for(n: int) -> ConstructionSpec:
    """Partition sizes and bundle tables for the construction on n vertices."""
    if n < 0:
        raise GraphError("n must be non-negative")
    q, residue = divmod(n, 6)
    if q < _MIN_Q[residue]:
        raise GraphError(
            f"no construction for n={n}: the n = 6q+{residue} family needs "
            f"n >= {min_supported_n(residue)}")
    bundles, non_edges = _TABLES[residue]
    overrides = {1: R} if residue in (1, 2, 4) else {}
    return ConstructionSpec(
        residue=residue,
        q=q,
        class_sizes=_sizes(residue, q),
        bundles=tuple(sorted(bundles.items())),
        non_edges=non_edges,
        intra_class_colour_overrides=overrides,
    )


def _class_blocks(sizes: Sequence[int]) -> list[range]:
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(range(start, start + s))
        start += s
    return blocks


def build_from_spec(spec: ConstructionSpec) -> ColoredGraph:
    blocks = _class_blocks(spec.class_sizes)
    edges: dict[tuple[int, int], Colour] = {}
    for idx, block in enumerate(blocks, start=1):
        colour = spec.intra_class_colour_overrides.get(idx, R)
        for a in block:
            for b in range(a + 1, block.stop):
                edges[(a, b)] = colour
    for (a, b), colours in spec.bundles:
        t = 0
        for u in blocks[a - 1]:
            for v in blocks[b - 1]:
                edges[(u, v)] = colours[t % len(colours)]
                t += 1
    return ColoredGraph(spec.n, edges)


def build(n: int) -> ColoredGraph:
    """The counterexample graph on n vertices (see spec_for for minima)."""
    return build_from_spec(spec_for(n))


# ---------------------------------------------------------------------------
# Affine-plane colouring (sharpness example, k = 3)
# ---------------------------------------------------------------------------

def build_affine_plane(m: int) -> ColoredGraph:
    """Four groups of m vertices; the three pairings of groups give the
    colours (12|34 red, 13|24 blue, 14|23 green), intra-group edges red.
    Every monochromatic component has order exactly 2m = n/2."""
    if m <= 0:
        raise GraphError("m must be positive")
    blocks = _class_blocks([m] * 4)
    edges: dict[tuple[int, int], Colour] = {}
    for block in blocks:
        for a in block:
            for b in range(a + 1, block.stop):
                edges[(a, b)] = R
    pairings = {R: ((0, 1), (2, 3)), B: ((0, 2), (1, 3)), G: ((0, 3), (1, 2))}
    for colour, pairs in pairings.items():
        for (x, y) in pairs:
            for u in blocks[x]:
                for v in blocks[y]:
                    edges[(u, v)] = colour
    return ColoredGraph(4 * m, edges)


# ---------------------------------------------------------------------------
# Limit configurations (the q -> infinity weight structure of the builds)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LimitConfiguration:
    label: str
    class_weights: tuple[Fraction, ...]
    groupings: Mapping[Colour, tuple[tuple[int, ...], ...]]
    pattern: IntersectionPattern
    point: Mapping[tuple[int, int, int], Fraction]

    def lp1_point(self, alpha: Fraction = Fraction(5, 6)) -> list[Fraction]:
        """Point vector in LP1 variable order: 27 cell weights then alpha."""
        vec = [Fraction(0)] * 28
        for cell, w in self.point.items():
            vec[SHAPE_333.cell_index(*cell)] = w
        vec[27] = alpha
        return vec


_LIMIT_DATA = {
    # label: (class weights by 1-based id, red comps, blue comps, green comps)
    "124": (
        {1: 0, 2: 0, 3: 1, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1},
        ((2, 3, 5, 6), (4, 7, 8), (1,)),
        ((1, 3, 5, 7), (4, 6), (2, 8)),
        ((1, 3, 6, 8), (4, 5), (2, 7)),
    ),
    "0_3": (
        {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1},
        ((3, 4, 5), (1, 2), (6,)),
        ((2, 4, 6), (1, 3), (5,)),
        ((1, 5, 6), (2, 3), (4,)),
    ),
    "5": (
        {1: 0, 2: 0, 3: 0, 4: 1, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1},
        ((1, 4, 7, 9), (3, 5, 6, 8), (2,)),
        ((2, 5, 7, 8), (3, 4, 6, 9), (1,)),
        ((1, 2, 4, 5, 6), (3, 8, 9), (7,)),
    ),
}


def limit_configuration(label: str) -> LimitConfiguration:
    """The limiting weighted configuration for a residue family.

    Labels: "124" (n = 6q+1, 6q+2, 6q+4), "0_3" (n = 6q, 6q+3), "5"
    (n = 6q+5).  Weights are sixths; classes of constant finite size
    become zero-weight cells whose intersections stay non-empty.
    """
    if label not in _LIMIT_DATA:
        raise GraphError(f"unknown limit configuration {label!r}; "
                         f"choose from {sorted(_LIMIT_DATA)}")
    raw_w, red, blue, green = _LIMIT_DATA[label]
    weights = {cls: Fraction(w, 6) for cls, w in raw_w.items()}

    def comp_order(comps):
        def weight(comp):
            return sum(weights[c] for c in comp)
        return tuple(sorted(comps, key=lambda comp: (-weight(comp), comp[0])))

    groupings = {R: comp_order(red), B: comp_order(blue), G: comp_order(green)}

    def index_of(cls, colour):
        for idx, comp in enumerate(groupings[colour]):
            if cls in comp:
                return idx
        raise AssertionError(f"class {cls} missing from {colour}")

    point: dict[tuple[int, int, int], Fraction] = {}
    for cls in raw_w:
        cell = (index_of(cls, R), index_of(cls, B), index_of(cls, G))
        point[cell] = point.get(cell, Fraction(0)) + weights[cls]
    pattern = pattern_from_cells(SHAPE_333, point.keys())
    return LimitConfiguration(
        label=label,
        class_weights=tuple(weights[c] for c in sorted(raw_w)),
        groupings=groupings,
        pattern=pattern,
        point=point,
    )

"""Graph transforms backing the reduction argument: blow-ups and merges.

blow_up replaces each vertex by a t-clique and each edge by a same-coloured
complete bipartite bundle; the minimum degree law delta' = t*delta + t - 1
is checked by the test suite.  merge_red_components joins two small red
components either by adding one red edge (some cross pair is non-adjacent)
or, when the components are completely joined, by recolouring one edge of a
2-blow-up, which keeps all other component orders intact via the
four-vertex detour between the two copies.
"""

from __future__ import annotations

from typing import Iterable

from .graphs import Colour, ColoredGraph, GraphError, components, verify_counterexample


def blow_up(g: ColoredGraph, t: int) -> ColoredGraph:
    """The t-blow-up; vertex v becomes copies v*t .. v*t + t - 1.

    Edges inside a copy are red (any choice works when every vertex of g
    meets all three colours; red is pinned for determinism).
    """
    if t <= 0:
        raise GraphError("blow-up multiplicity must be >= 1")
    edges: dict[tuple[int, int], Colour] = {}
    for v in range(g.n):
        base = v * t
        for a in range(t):
            for b in range(a + 1, t):
                edges[(base + a, base + b)] = Colour.RED
    for u, v, colour in g.edges():
        for a in range(t):
            for b in range(t):
                edges[(u * t + a, v * t + b)] = colour
    return ColoredGraph(g.n * t, edges)


def _as_component(g: ColoredGraph, vertices: Iterable[int]) -> tuple[int, ...]:
    comp = tuple(sorted(vertices))
    red = components(g, Colour.RED).components
    if comp not in red:
        raise GraphError(f"{comp} is not a red component")
    return comp


def merge_red_components(g: ColoredGraph, c1: Iterable[int],
                         c2: Iterable[int]) -> ColoredGraph:
    """Merge two red components whose orders sum to less than n/2.

    Case (a): some pair u in c1, v in c2 is non-adjacent; the result is g
    plus the red edge uv (lexicographically least such pair).
    Case (b): the components are completely joined; the result is the
    2-blow-up with the first copy of the least pair recoloured red.  The
    displaced colour stays connected through the blue/green path via the
    second copies, so only the red decomposition changes.
    """
    comp1 = _as_component(g, c1)
    comp2 = _as_component(g, c2)
    if comp1 == comp2:
        raise GraphError("components must be distinct")
    if 2 * (len(comp1) + len(comp2)) >= g.n:
        raise GraphError("components too large: |c1| + |c2| must be < n/2")
    if not verify_counterexample(g).passes:
        raise GraphError("input already has a monochromatic component of order >= n/2")

    for u in comp1:
        for v in comp2:
            if g.colour_of(u, v) is None:
                return g.with_edges([((u, v), Colour.RED)])

    u, v = comp1[0], comp2[0]
    doubled = blow_up(g, 2)
    return doubled.with_edges([((2 * u, 2 * v), Colour.RED)], recolour=True)

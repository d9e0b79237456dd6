"""3-edge-coloured graphs and their monochromatic component structure.

Vertices are integers 0..n-1.  Every edge carries exactly one of the three
colours red < blue < green; unordered pairs are stored with the smaller
endpoint first.  Values are immutable after construction and all operations
are pure, so graphs are safe to share between threads.

Text format: first line "n m", then m lines "u v c" with u < v and
c in {R, B, G}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Mapping, Sequence


class Colour(IntEnum):
    RED = 0
    BLUE = 1
    GREEN = 2

    @property
    def letter(self) -> str:
        return "RBG"[self]

    @staticmethod
    def from_letter(text: str) -> "Colour":
        try:
            return Colour("RBG".index(text))
        except ValueError:
            raise GraphFormatError(f"unknown colour {text!r}") from None


COLOURS = (Colour.RED, Colour.BLUE, Colour.GREEN)


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """Parse failure; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ColoredGraph:
    """A simple graph on n vertices whose edges each carry one Colour."""

    __slots__ = ("n", "_edges")

    def __init__(self, n: int, edges: Mapping[tuple[int, int], Colour] | Iterable):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        items = edges.items() if isinstance(edges, Mapping) else edges
        store: dict[tuple[int, int], Colour] = {}
        for (u, v), colour in items:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < n):
                raise GraphError(f"edge ({u}, {v}) outside [0, {n})")
            if (u, v) in store:
                raise GraphError(f"duplicate edge ({u}, {v})")
            store[(u, v)] = Colour(colour)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_edges", store)

    def __setattr__(self, *a):
        raise AttributeError("ColoredGraph is immutable")

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> Iterator[tuple[int, int, Colour]]:
        for (u, v), c in self._edges.items():
            yield u, v, c

    def colour_of(self, u: int, v: int) -> Colour | None:
        if u > v:
            u, v = v, u
        return self._edges.get((u, v))

    def degree(self, v: int) -> int:
        return sum(1 for (a, b) in self._edges if a == v or b == v)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for (u, v) in self._edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self, colour: Colour | None = None) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for (u, v), c in self._edges.items():
            if colour is None or c == colour:
                adj[u].append(v)
                adj[v].append(u)
        return adj

    def with_edges(self, extra: Iterable[tuple[tuple[int, int], Colour]],
                   recolour: bool = False) -> "ColoredGraph":
        """A copy with extra edges; recolour=True lets them replace existing."""
        store = dict(self._edges)
        for (u, v), c in extra:
            if u > v:
                u, v = v, u
            if recolour:
                store[(u, v)] = Colour(c)
            else:
                if (u, v) in store:
                    raise GraphError(f"edge ({u}, {v}) already present")
                store[(u, v)] = Colour(c)
        return ColoredGraph(self.n, store)

    def permuted(self, vertex_map: Sequence[int] | None = None,
                 colour_map: Mapping[Colour, Colour] | None = None) -> "ColoredGraph":
        vm = vertex_map or list(range(self.n))
        cm = colour_map or {c: c for c in COLOURS}
        return ColoredGraph(
            self.n,
            {(vm[u], vm[v]): cm[c] for (u, v), c in self._edges.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, ColoredGraph)
                and self.n == other.n and self._edges == other._edges)

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, m={self.m})"

    # -- text format -------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.n} {self.m}"]
        for (u, v) in sorted(self._edges):
            lines.append(f"{u} {v} {self._edges[(u, v)].letter}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "ColoredGraph":
        lines = text.splitlines()
        if not lines or not lines[0].strip():
            raise GraphFormatError("missing header", 1)
        parts = lines[0].split()
        if len(parts) != 2:
            raise GraphFormatError("header must be 'n m'", 1)
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("header must be two integers", 1) from None
        edges = {}
        row = 0
        for ln, raw in enumerate(lines[1:], start=2):
            if not raw.strip():
                continue
            row += 1
            fields = raw.split()
            if len(fields) != 3:
                raise GraphFormatError("edge line must be 'u v c'", ln)
            try:
                u, v = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError("endpoints must be integers", ln) from None
            if u >= v:
                raise GraphFormatError("endpoints must satisfy u < v", ln)
            try:
                c = Colour.from_letter(fields[2])
            except GraphFormatError as exc:
                raise GraphFormatError(str(exc), ln) from None
            if (u, v) in edges:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", ln)
            if v >= n:
                raise GraphFormatError(f"vertex {v} outside [0, {n})", ln)
            edges[(u, v)] = c
        if row != m:
            raise GraphFormatError(f"header promises {m} edges, file has {row}",
                                   len(lines))
        return ColoredGraph(n, edges)


# ---------------------------------------------------------------------------
# Component decomposition
# ---------------------------------------------------------------------------

class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class ComponentDecomposition:
    colour: Colour
    components: tuple[tuple[int, ...], ...]

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def order_multiset(self) -> list[int]:
        return sorted(self.orders)

    def edged_order_multiset(self) -> list[int]:
        """Orders of components that contain at least one edge."""
        return sorted(o for o in self.orders if o > 1)

    def component_of(self, v: int) -> tuple[int, ...]:
        for comp in self.components:
            if v in comp:
                return comp
        raise GraphError(f"vertex {v} out of range")


def components(g: ColoredGraph, colour: Colour) -> ComponentDecomposition:
    """Connected components of the colour-restricted spanning subgraph.

    Colour-isolated vertices appear as singleton components.  Components are
    listed largest first, ties by smallest contained vertex.
    """
    uf = _UnionFind(g.n)
    for u, v, c in g.edges():
        if c == colour:
            uf.union(u, v)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(uf.find(v), []).append(v)
    comps = sorted((tuple(sorted(vs)) for vs in groups.values()),
                   key=lambda c: (-len(c), c[0]))
    return ComponentDecomposition(colour, tuple(comps))


def min_degree(g: ColoredGraph) -> int:
    """Minimum vertex degree, colours ignored; undefined on the empty graph."""
    if g.n == 0:
        raise GraphError("minimum degree undefined for the empty graph")
    return min(g.degrees())


def all_colours_incident(g: ColoredGraph) -> bool:
    """True iff every vertex meets an edge of each of the three colours."""
    seen = [0] * g.n
    for u, v, c in g.edges():
        seen[u] |= 1 << c
        seen[v] |= 1 << c
    return all(s == 0b111 for s in seen)


@dataclass(frozen=True)
class VerificationReport:
    n: int
    min_degree: int
    order_multisets: dict[Colour, list[int]]
    edged_order_multisets: dict[Colour, list[int]]
    max_mono_order: int
    passes: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "min_degree": self.min_degree,
            "component_orders": {c.letter: self.order_multisets[c] for c in COLOURS},
            "component_orders_with_edge": {
                c.letter: self.edged_order_multisets[c] for c in COLOURS},
            "max_mono_order": self.max_mono_order,
            "passes": self.passes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def verify_counterexample(g: ColoredGraph) -> VerificationReport:
    """Check that every monochromatic component covers < n/2 vertices."""
    orders: dict[Colour, list[int]] = {}
    edged: dict[Colour, list[int]] = {}
    max_order = 0
    for c in COLOURS:
        dec = components(g, c)
        orders[c] = dec.order_multiset()
        edged[c] = dec.edged_order_multiset()
        if dec.orders:
            max_order = max(max_order, max(dec.orders))
    return VerificationReport(
        n=g.n,
        min_degree=min_degree(g),
        order_multisets=orders,
        edged_order_multisets=edged,
        max_mono_order=max_order,
        passes=2 * max_order < g.n,
    )

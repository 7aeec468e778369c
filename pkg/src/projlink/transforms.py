"""Delta-Y and Y-Delta exchanges, vertex splits, edge additions and closures.

Every enumerator returns graphs sorted by canonical code, one per
isomorphism class, so results never depend on traversal order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, canonical_form, canonical_form_colored, dedupe, join, norm_edge


class NotATriangle(GraphError):
    pass


class DegreeNotThree(GraphError):
    pass


class ClosureTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Triangle:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise NotATriangle(f"{self} repeats a vertex")

    @property
    def vertices(self) -> tuple[int, int, int]:
        return tuple(sorted((self.a, self.b, self.c)))  # type: ignore[return-value]

    def edges(self):
        a, b, c = self.vertices
        return [(a, b), (a, c), (b, c)]

    def check(self, g: Graph) -> None:
        for e in self.edges():
            if not (0 <= e[0] < g.n and 0 <= e[1] < g.n) or not g.has_edge(*e):
                raise NotATriangle(f"{self.vertices} is not a triangle of the graph")


@dataclass(frozen=True)
class VertexSplit:
    vertex: int
    kept: frozenset[int]
    moved: frozenset[int]

    def check(self, g: Graph) -> None:
        if self.kept & self.moved or self.kept | self.moved != g.adj[self.vertex]:
            raise GraphError("split sides must partition the neighbourhood")


def _tri(t: Triangle | Sequence[int]) -> Triangle:
    return t if isinstance(t, Triangle) else Triangle(*t)


def delta_y(g: Graph, t: Triangle | Sequence[int]) -> Graph:
    """Remove the triangle's edges and add a new vertex ``g.n`` joined to its corners."""
    t = _tri(t)
    t.check(g)
    edges = set(g.edges) - {norm_edge(*e) for e in t.edges()}
    edges |= {(x, g.n) for x in t.vertices}
    return Graph(g.n + 1, frozenset(edges))


def y_delta_collapsed(g: Graph, v: int) -> int:
    """Number of triangle edges that a Y-Delta at ``v`` would merge with existing ones."""
    if not 0 <= v < g.n or g.degree(v) != 3:
        raise DegreeNotThree(f"vertex {v} does not have degree 3")
    return sum(g.has_edge(x, y) for x, y in itertools.combinations(sorted(g.adj[v]), 2))


def y_delta(g: Graph, v: int) -> Graph:
    """Delete degree-3 vertex ``v`` and join its neighbours pairwise.

    Triangle edges already present are merged; the count of merged edges is
    recorded in the result's name for audit.  Vertices above ``v`` shift
    down by one.
    """
    collapsed = y_delta_collapsed(g, v)
    nb = sorted(g.adj[v])
    shift = lambda x: x - (x > v)  # noqa: E731
    edges = {norm_edge(shift(x), shift(y)) for x, y in g.edges if v not in (x, y)}
    edges |= {norm_edge(shift(x), shift(y)) for x, y in itertools.combinations(nb, 2)}
    name = g.name
    if collapsed:
        name = f"{g.name or 'G'} [y-delta at {v} merged {collapsed} edge(s)]"
    return Graph(g.n - 1, frozenset(edges), name)


def dy_closure(g: Graph, limit: int = 10_000) -> list[Graph]:
    """All graphs reachable by Delta-Y and Y-Delta exchanges, one per isomorphism class."""
    seen = {canonical_form(g): g}
    frontier = [g]
    while frontier:
        nxt = []
        for h in frontier:
            out = [delta_y(h, t) for t in h.triangles()]
            out += [y_delta(h, v) for v in range(h.n) if h.degree(v) == 3]
            for x in out:
                c = canonical_form(x)
                if c not in seen:
                    seen[c] = x
                    nxt.append(x)
                    if len(seen) > limit:
                        raise ClosureTooLarge(f"closure exceeded {limit} graphs")
        frontier = nxt
    return [seen[c] for c in sorted(seen)]


def enumerate_edge_additions(g: Graph) -> list[Graph]:
    return dedupe(g.add_edge(*e) for e in g.non_edges())


def split_vertex(g: Graph, split: VertexSplit) -> Graph:
    """Replace ``split.vertex`` by itself (keeping ``kept``) and a new vertex ``g.n``.

    The two halves are joined by an edge.
    """
    split.check(g)
    v, new = split.vertex, g.n
    edges = {e for e in g.edges if not (v in e and (e[0] in split.moved or e[1] in split.moved))}
    edges |= {norm_edge(w, new) for w in split.moved}
    edges.add((v, new))
    return Graph(g.n + 1, frozenset(edges))


def vertex_splits(g: Graph, v: int) -> list[VertexSplit]:
    """Unordered 2-partitions of v's edges; the kept side holds the lowest neighbour."""
    nb = sorted(g.adj[v])
    if not nb:
        return []
    out = []
    rest = nb[1:]
    for r in range(1, len(rest) + 1):
        for moved in itertools.combinations(rest, r):
            ms = frozenset(moved)
            out.append(VertexSplit(v, frozenset(nb) - ms, ms))
    return out


def enumerate_vertex_splits(g: Graph) -> list[Graph]:
    return dedupe(split_vertex(g, s) for v in range(g.n) for s in vertex_splits(g, v))


def triangle_orbits(g: Graph) -> list[tuple[int, int, int]]:
    """The smallest triangle of each orbit under the automorphism group."""
    seen: dict[bytes, tuple[int, int, int]] = {}
    for t in g.triangles():
        colors = [1 if v in t else 0 for v in range(g.n)]
        seen.setdefault(canonical_form_colored(g, colors), t)
    return sorted(seen.values())


__all__ = [
    "Triangle", "VertexSplit", "NotATriangle", "DegreeNotThree", "ClosureTooLarge",
    "delta_y", "y_delta", "y_delta_collapsed", "dy_closure", "enumerate_edge_additions",
    "split_vertex", "vertex_splits", "enumerate_vertex_splits", "triangle_orbits", "join",
]

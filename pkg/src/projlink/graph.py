"""Simple undirected graphs, minor primitives and canonical labeling.

Graphs are immutable values.  Vertices are the integers ``0 .. n-1`` and
edges are stored as sorted pairs ``(u, v)`` with ``u < v``.  Every
operation returns a new graph; deletions and contractions compact the
vertex indices so results are deterministic.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

#: Largest vertex count accepted by :func:`canonical_form`.
CANONICAL_LIMIT = 16


class GraphError(ValueError):
    """Raised for malformed graphs or operations on absent elements."""


class GraphTooLarge(GraphError):
    pass


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        edges = frozenset(self.edges)
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge {(u, v)} not normalized or out of range")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str | None = None) -> "Graph":
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            es.add(norm_edge(u, v))
        return cls(n, frozenset(es), name)

    # -- basic queries ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nb: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        return tuple(sum(1 << w for w in nb) for nb in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        return [(u, v) for u, v in itertools.combinations(range(self.n), 2) if (u, v) not in self.edges]

    def named(self, name: str | None) -> "Graph":
        return Graph(self.n, self.edges, name)

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"

    # -- structure -------------------------------------------------------

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self) -> tuple[set[int], set[int]] | None:
        color: dict[int, int] = {}
        for s in range(self.n):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in color:
                        color[y] = 1 - color[x]
                        stack.append(y)
                    elif color[y] == color[x]:
                        return None
        return ({v for v, c in color.items() if c == 0}, {v for v, c in color.items() if c == 1})

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def triangles(self) -> list[tuple[int, int, int]]:
        out = []
        for u, v in self.sorted_edges():
            for w in sorted(self.adj[u] & self.adj[v]):
                if w > v:
                    out.append((u, v, w))
        return out

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        return self.relabel({v: i for i, v in enumerate(keep)})

    def relabel(self, mapping: dict[int, int] | Sequence[int], n: int | None = None) -> "Graph":
        """Relabel vertices through ``mapping``; unmapped vertices are dropped.

        Edges whose endpoints collapse onto one vertex are dropped, and
        parallel images merge.
        """
        if not isinstance(mapping, dict):
            mapping = dict(enumerate(mapping))
        if n is None:
            n = max(mapping.values(), default=-1) + 1
        es = set()
        for u, v in self.edges:
            if u in mapping and v in mapping:
                a, b = mapping[u], mapping[v]
                if a != b:
                    es.add(norm_edge(a, b))
        return Graph(n, frozenset(es), self.name)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"cannot add edge {(u, v)}")
        e = norm_edge(u, v)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        return Graph(self.n, self.edges | {e})

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        v = self.n
        return Graph(self.n + 1, self.edges | {(u, v) for u in neighbors})


# -- minor primitives ------------------------------------------------------


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    key = norm_edge(*e)
    if key not in g.edges:
        raise GraphError(f"edge {key} not present")
    return Graph(g.n, g.edges - {key})


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} not present")
    mapping = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    return g.relabel(mapping, g.n - 1).named(None)


def contraction_map(n: int, e: Sequence[int]) -> dict[int, int]:
    """Vertex map used by :func:`contract_edge`; the merged vertex keeps the smaller index."""
    a, b = norm_edge(*e)
    return {u: (a if u == b else (u if u < b else u - 1)) for u in range(n)}


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    key = norm_edge(*e)
    if key not in g.edges:
        raise GraphError(f"edge {key} not present")
    return g.relabel(contraction_map(g.n, key), g.n - 1).named(None)


def disjoint_union(*graphs: Graph) -> Graph:
    es = set()
    off = 0
    for h in graphs:
        es.update((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, frozenset(es))


# -- canonical labeling ----------------------------------------------------


def _refine(adj: tuple[frozenset[int], ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (label-invariant)."""
    while True:
        where = {}
        for i, cell in enumerate(cells):
            for v in cell:
                where[v] = i
        k = len(cells)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = [0] * k
                for w in adj[v]:
                    sig[where[w]] += 1
                groups.setdefault(tuple(sig), []).append(v)
            for sig in sorted(groups):
                out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(g: Graph, order: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    n = g.n
    code = 0
    for u, v in g.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        # pair (a, b) maps to a bit; earlier rows get more significant bits
        code |= 1 << (n * n - 1 - (a * n + b))
    return code


def _canonical_order(g: Graph, cells0: list[list[int]] | None = None) -> tuple[int, list[int]]:
    adj = g.adj
    best: list = [-1, None]

    def twins(u: int, v: int) -> bool:
        return adj[u] - {v} == adj[v] - {u}

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        if all(len(c) == 1 for c in cells):
            order = [c[0] for c in cells]
            code = _leaf_code(g, order)
            if code > best[0]:
                best[0], best[1] = code, order
            return
        idx = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[idx]
        reps: list[int] = []
        for v in target:
            # a transposition of twins is an automorphism fixing the partition
            if not any(twins(v, r) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [w for w in target if w != v]
            search(cells[:idx] + [[v], rest] + cells[idx + 1:])

    if g.n == 0:
        return 0, []
    search(cells0 if cells0 is not None else [list(range(g.n))])
    return best[0], best[1]


@functools.lru_cache(maxsize=200_000)
def _canon_cached(n: int, edges: frozenset[Edge]) -> tuple[bytes, tuple[int, ...]]:
    g = Graph(n, edges)
    code, order = _canonical_order(g)
    width = max(1, (n * n + 7) // 8)
    return n.to_bytes(2, "big") + code.to_bytes(width, "big"), tuple(order)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    if g.n > CANONICAL_LIMIT:
        raise GraphTooLarge(f"{g.n} vertices exceeds canonical labeling limit {CANONICAL_LIMIT}")
    return _canon_cached(g.n, g.edges)[0]


def canonical_form_colored(g: Graph, colors: Sequence[int]) -> bytes:
    """Canonical code of a vertex-coloured graph; isomorphisms must preserve colours."""
    if g.n > CANONICAL_LIMIT:
        raise GraphTooLarge(f"{g.n} vertices exceeds canonical labeling limit {CANONICAL_LIMIT}")
    if len(colors) != g.n:
        raise GraphError("need one colour per vertex")
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    cells = [classes[c] for c in sorted(classes)]
    code, _ = _canonical_order(g, cells)
    sizes = ",".join(f"{c}:{len(classes[c])}" for c in sorted(classes))
    width = max(1, (g.n * g.n + 7) // 8)
    return g.n.to_bytes(2, "big") + code.to_bytes(width, "big") + sizes.encode()


def canonical_labeling(g: Graph) -> list[int]:
    """``order[k]`` is the vertex of ``g`` that receives canonical label ``k``."""
    if g.n > CANONICAL_LIMIT:
        raise GraphTooLarge(f"{g.n} vertices exceeds canonical labeling limit {CANONICAL_LIMIT}")
    return list(_canon_cached(g.n, g.edges)[1])


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    return g.relabel({v: i for i, v in enumerate(order)}, g.n)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    """One representative per isomorphism class, sorted by canonical code."""
    seen: dict[bytes, Graph] = {}
    for h in graphs:
        seen.setdefault(canonical_form(h), h)
    return [seen[k] for k in sorted(seen)]


# -- constructors ----------------------------------------------------------


def empty_graph(n: int, name: str | None = None) -> Graph:
    return Graph(n, frozenset(), name)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2), f"K{n}")


def complete_multipartite(*sizes: int) -> Graph:
    parts, off = [], 0
    for s in sizes:
        parts.append(range(off, off + s))
        off += s
    es = [(u, v) for p, q in itertools.combinations(parts, 2) for u in p for v in q]
    return Graph.from_edges(off, es, "K" + ",".join(map(str, sizes)))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def star_graph(k: int) -> Graph:
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)], f"K1,{k}")


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to every vertex of a rim cycle on ``1..rim``."""
    es = [(0, i) for i in range(1, rim + 1)]
    es += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, es, f"W{rim}")


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner, "P10")


def k44_minus_e() -> Graph:
    g = complete_bipartite(4, 4)
    return delete_edge(g, (3, 7)).named("K4,4-e")


def prism_graph(lengths: Sequence[int] = (1, 1, 1)) -> Graph:
    """Two triangles joined by three disjoint paths of the given lengths."""
    es = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    n = 6
    for i, length in enumerate(lengths):
        if length < 1:
            raise GraphError("path lengths must be positive")
        prev = i
        for _ in range(length - 1):
            es.append((prev, n))
            prev = n
            n += 1
        es.append((prev, 3 + i))
    return Graph.from_edges(n, es, "prism" if tuple(lengths) == (1, 1, 1) else f"prism{tuple(lengths)}")


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    base = disjoint_union(g, h)
    cross = [(u, g.n + w) for u in range(g.n) for w in range(h.n)]
    return Graph(base.n, base.edges | frozenset(cross))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (2^(n choose 2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


# -- edge-list text format -------------------------------------------------


def parse_el(text: str, name: str | None = None) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln]
    if not data:
        raise GraphError("edge list has no vertex count line")
    try:
        n = int(data[0])
        edges = []
        for ln in data[1:]:
            a, b = ln.split()
            edges.append((int(a), int(b)))
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    for u, v in edges:
        if not 0 <= u < v < n:
            raise GraphError(f"edge line {u} {v} violates 0 <= u < v < {n}")
    if len(set(edges)) != len(edges):
        raise GraphError("duplicate edge in edge list")
    return Graph.from_edges(n, edges, name)


def format_el(g: Graph, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(str(g.n))
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def read_el(path: str | Path) -> Graph:
    path = Path(path)
    return parse_el(path.read_text(), path.stem)


def write_el(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_el(g, comment))

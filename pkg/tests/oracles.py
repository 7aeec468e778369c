"""Independent reference implementations used only by the tests.

Nothing here touches the package's canonical labeling or search code.
Isomorphism classes are bucketed by a degree invariant and resolved with
networkx's VF2 matcher.
"""

from __future__ import annotations

import networkx as nx

from projlink.graph import Graph

EdgeSet = frozenset


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _invariant(edges: EdgeSet) -> tuple:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    nbr: dict[int, list[int]] = {x: [] for x in deg}
    for u, v in edges:
        nbr[u].append(deg[v])
        nbr[v].append(deg[u])
    return (len(deg), len(edges), tuple(sorted((deg[x], tuple(sorted(nbr[x]))) for x in deg)))


class IsoSet:
    def __init__(self):
        self.buckets: dict[tuple, list[nx.Graph]] = {}

    def add(self, edges: EdgeSet) -> bool:
        bucket = self.buckets.setdefault(_invariant(edges), [])
        h = nx.Graph(list(edges))
        if any(nx.is_isomorphic(h, x) for x in bucket):
            return False
        bucket.append(h)
        return True

    def __contains__(self, edges: EdgeSet) -> bool:
        h = nx.Graph(list(edges))
        return any(nx.is_isomorphic(h, x) for x in self.buckets.get(_invariant(edges), []))

    def __len__(self):
        return sum(map(len, self.buckets.values()))


def _contract(edges: EdgeSet, u: int, v: int) -> EdgeSet:
    out = set()
    for a, b in edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            out.add((min(a, b), max(a, b)))
    return frozenset(out)


def _n(edges: EdgeSet) -> int:
    return len({x for e in edges for x in e})


def minor_closure(g: Graph, min_nodes: int = 0, min_edges: int = 0) -> IsoSet:
    """Edge-set minors of g (isolated vertices dropped) down to the given size.

    Explores single edge deletions and contractions; deleting a vertex is a
    run of edge deletions followed by dropping the isolated vertex.
    """
    seen = IsoSet()
    start = frozenset(g.edges)
    seen.add(start)
    stack = [start]
    while stack:
        h = stack.pop()
        for e in h:
            for x in (h - {e}, _contract(h, *e)):
                if len(x) < min_edges or _n(x) < min_nodes:
                    continue
                if seen.add(x):
                    stack.append(x)
    return seen


def _drop_vertex(edges: EdgeSet, v: int) -> EdgeSet:
    return frozenset(e for e in edges if v not in e)


def has_minor_oracle(g: Graph, h: Graph) -> bool:
    """Exhaustive minor test for a pattern without isolated vertices.

    Every minor is a subgraph of some graph reached by contractions and
    vertex deletions, so only those two moves are closed over and each class
    is then tested for a subgraph copy with VF2.
    """
    if h.n > g.n or h.m > g.m:
        return False
    target = to_nx(h)
    seen = IsoSet()
    start = frozenset(g.edges)
    seen.add(start)
    stack = [start]
    while stack:
        x = stack.pop()
        xg = nx.Graph(list(x))
        if nx.algorithms.isomorphism.GraphMatcher(xg, target).subgraph_is_monomorphic():
            return True
        verts = {v for e in x for v in e}
        moves = [_contract(x, *e) for e in x] + [_drop_vertex(x, v) for v in verts]
        for y in moves:
            if len(y) < h.m or _n(y) < h.n:
                continue
            if seen.add(y):
                stack.append(y)
    return False

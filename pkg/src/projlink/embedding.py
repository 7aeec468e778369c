"""Signed rotation systems: combinatorial embeddings in the projective plane.

An :class:`Rp2Embedding` is a rotation system (cyclic order of neighbours at
each vertex) together with a set of negative edges.  A negative edge is one
whose drawing crosses the boundary of the disk model of the projective
plane an odd number of times; reading the rotation at the far end of such an
edge reverses orientation.  Faces are traced with flag permutations, so the
same code handles planar (Euler characteristic 2) and projective (1) maps.

The search in :func:`enumerate_rp2_embeddings` builds embeddings edge by
edge.  A new edge can only join two corners of the same face: joining two
different faces lowers the Euler characteristic by two, and restricting an
embedding to a connected subgraph never raises its Euler genus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .graph import Edge, Graph, GraphError, norm_edge


class EmbeddingError(ValueError):
    """Malformed rotation system, signature, or cycle."""


class HomologyMismatch(EmbeddingError):
    pass


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict."""


DEFAULT_CYCLE_CAP = 1_000_000


@dataclass(frozen=True)
class Rp2Embedding:
    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    negative: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))
        object.__setattr__(self, "negative", frozenset(norm_edge(*e) for e in self.negative))

    # -- local structure -------------------------------------------------

    def sign(self, u: int, v: int) -> int:
        return -1 if norm_edge(u, v) in self.negative else 1

    @cached_property
    def _pos(self) -> tuple[dict[int, int], ...]:
        return tuple({w: i for i, w in enumerate(r)} for r in self.rotation)

    def succ(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][w] + 1) % len(r)]

    def pred(self, v: int, w: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][w] - 1) % len(r)]

    def validate(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise EmbeddingError("rotation must list every vertex")
        for v, r in enumerate(self.rotation):
            if len(set(r)) != len(r) or set(r) != set(g.adj[v]):
                raise EmbeddingError(f"rotation at {v} must list each neighbour exactly once")
        if not self.negative <= g.edges:
            raise EmbeddingError("negative edge not in graph")
        if not g.is_connected():
            raise EmbeddingError("embedded graph must be connected")
        if self.euler_characteristic not in (1, 2):
            raise EmbeddingError(f"Euler characteristic {self.euler_characteristic} is not a sphere or projective plane")

    # -- faces -----------------------------------------------------------

    def _tau0(self, flag):
        u, v, s = flag
        return (v, u, 1 - s) if self.sign(u, v) > 0 else (v, u, s)

    def _tau1(self, flag):
        u, v, s = flag
        return (u, self.succ(u, v), 0) if s else (u, self.pred(u, v), 1)

    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Face boundary walks as sequences of traversed darts ``(u, v)``."""
        seen = set()
        walks = []
        for u in range(self.graph.n):
            for v in self.rotation[u]:
                for s in (1, 0):
                    start = (u, v, s)
                    if start in seen:
                        continue
                    walk = []
                    f = start
                    while True:
                        g = self._tau0(f)
                        seen.add(f)
                        seen.add(g)
                        walk.append((f[0], f[1]))
                        f = self._tau1(g)
                        if f == start:
                            break
                    walks.append(tuple(walk))
        return tuple(walks)

    @property
    def face_count(self) -> int:
        isolated = sum(1 for r in self.rotation if not r)
        return len(self.faces) + isolated

    @property
    def euler_characteristic(self) -> int:
        return self.graph.n - self.graph.m + self.face_count

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic

    # -- derived drawings ------------------------------------------------

    def switch(self, v: int) -> "Rp2Embedding":
        """Local switch at ``v``: reverse its rotation and flip its edge signs."""
        flipped = {norm_edge(v, w) for w in self.graph.adj[v]}
        rot = list(self.rotation)
        rot[v] = tuple(reversed(rot[v]))
        return Rp2Embedding(self.graph, tuple(rot), self.negative ^ flipped)

    def mirror(self) -> "Rp2Embedding":
        return Rp2Embedding(self.graph, tuple(tuple(reversed(r)) for r in self.rotation), self.negative)

    def delete_edges(self, edges: Iterable[Sequence[int]]) -> "Rp2Embedding":
        drop = {norm_edge(*e) for e in edges}
        g = Graph(self.graph.n, self.graph.edges - drop)
        rot = tuple(tuple(w for w in r if norm_edge(v, w) not in drop) for v, r in enumerate(self.rotation))
        return Rp2Embedding(g, rot, self.negative - drop)

    def normalized(self) -> "Rp2Embedding":
        """Switch so every edge of a BFS spanning tree from vertex 0 is positive."""
        g = self.graph
        flip = [0] * g.n
        seen = {0} if g.n else set()
        queue = [0] if g.n else []
        for x in queue:
            for y in sorted(g.adj[x]):
                if y not in seen:
                    seen.add(y)
                    flip[y] = flip[x] ^ (1 if self.sign(x, y) < 0 else 0)
                    queue.append(y)
        neg = frozenset(e for e in g.edges if (e in self.negative) ^ flip[e[0]] ^ flip[e[1]])
        rot = tuple(tuple(reversed(r)) if flip[v] else r for v, r in enumerate(self.rotation))
        return Rp2Embedding(g, rot, neg)

    def key(self) -> tuple:
        """Label-dependent key identifying the embedding up to switching and reflection."""
        def one(e: "Rp2Embedding"):
            rot: list[tuple[int, ...]] = []
            for r in e.rotation:
                if r:
                    i = r.index(min(r))
                    rot.append(r[i:] + r[:i])
                else:
                    rot.append(())
            return (tuple(rot), tuple(sorted(e.negative)))
        base = self.normalized()
        return min(one(base), one(base.mirror()))


# -- face tracing and homology ---------------------------------------------


def trace_faces(emb: Rp2Embedding) -> list[list[int]]:
    """Face boundary walks as vertex sequences."""
    emb.validate()
    walks = [[u for u, _ in w] for w in emb.faces]
    walks += [[v] for v, r in enumerate(emb.rotation) if not r]
    return walks


def check_cycle(g: Graph, cycle: Sequence[int]) -> list[Edge]:
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise EmbeddingError(f"{cyc} is not a simple cycle")
    edges = [norm_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
    for e in edges:
        if e not in g.edges:
            raise EmbeddingError(f"{cyc} is not a cycle: missing edge {e}")
    return edges


def cycle_homology(emb: Rp2Embedding, cycle: Sequence[int]) -> int:
    """0 if the cycle bounds a disk, 1 if it is one-sided."""
    edges = check_cycle(emb.graph, cycle)
    return sum(e in emb.negative for e in edges) % 2


def one_homologous_edges(emb: Rp2Embedding) -> frozenset[Edge]:
    return emb.negative


def switch_vertex(emb: Rp2Embedding, v: int) -> Rp2Embedding:
    if not 0 <= v < emb.graph.n:
        raise EmbeddingError(f"no vertex {v}")
    return emb.switch(v)


def simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP, allowed: frozenset[Edge] | None = None) -> Iterator[list[int]]:
    """Each simple cycle once, starting at its smallest vertex.

    ``allowed`` restricts the cycles to a subset of the edges.
    """
    adj = g.adj if allowed is None else tuple(
        frozenset(w for w in g.adj[v] if norm_edge(v, w) in allowed) for v in range(g.n))
    count = 0
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(x: int):
            nonlocal count
            for y in sorted(adj[x]):
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    count += 1
                    if count > cap:
                        raise BudgetExceeded(f"more than {cap} cycles")
                    yield list(path)
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    yield from extend(y)
                    path.pop()
                    on_path.discard(y)

        yield from extend(s)


def _components_avoiding(g: Graph, removed: set[int]) -> list[list[int]]:
    seen = set(removed)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _order_sides(a: set[int], b: set[int]) -> tuple[frozenset[int], frozenset[int]]:
    if not a or (b and min(b) < min(a)):
        a, b = b, a
    return frozenset(a), frozenset(b)


def disk_sides(emb: Rp2Embedding, cycle: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Vertices off a 0-homologous cycle, split by the two regions it bounds.

    Faces glued across edges not on the cycle form the two regions; each
    off-cycle vertex lies in the region of any face at it.  The side holding
    the smallest off-cycle vertex comes first.
    """
    cyc_edges = set(check_cycle(emb.graph, cycle))
    if sum(e in emb.negative for e in cyc_edges) % 2:
        raise HomologyMismatch("cycle is 1-homologous")
    faces = emb.faces
    parent = list(range(len(faces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_edge: dict[Edge, list[int]] = {}
    face_at: dict[int, int] = {}
    for i, walk in enumerate(faces):
        for u, v in walk:
            by_edge.setdefault(norm_edge(u, v), []).append(i)
            face_at.setdefault(u, i)
    for e, fs in by_edge.items():
        if e in cyc_edges:
            continue
        for j in fs[1:]:
            parent[find(j)] = find(fs[0])
    on_cycle = set(cycle)
    regions: dict[int, set[int]] = {}
    for v in range(emb.graph.n):
        if v in on_cycle:
            continue
        regions.setdefault(find(face_at[v]), set()).add(v)
    roots = {find(i) for i in range(len(faces))}
    if len(roots) != 2:
        raise EmbeddingError(f"0-homologous cycle cut the surface into {len(roots)} regions")
    parts = list(regions.values()) + [set(), set()]
    return _order_sides(parts[0], parts[1])


def _cycle_sides(emb: Rp2Embedding, cycle: Sequence[int], transport: bool) -> list[tuple[list[int], set[int]]]:
    """For each component of G - V(c), the set of local sides (0/1) it attaches on.

    Side 0 at a cycle vertex is the arc of its rotation running from the
    outgoing to the incoming cycle edge.  With ``transport`` the frame flips
    across negative edges, which follows a two-sided cycle around the
    surface.  Without it, sides are read in the fixed drawing's own
    orientation: for a one-sided cycle these are the two colour classes of
    the disk picture cut along the cycle.
    """
    cyc = list(cycle)
    k = len(cyc)
    if transport:
        # start just after a negative edge so the frame closes up
        for i in range(k):
            if emb.sign(cyc[i], cyc[(i + 1) % k]) < 0:
                cyc = cyc[i + 1:] + cyc[:i + 1]
                break
    on_cycle = set(cyc)
    side_of: dict[tuple[int, int], int] = {}
    frame = 1
    for t in range(k):
        v, p, q = cyc[t], cyc[t - 1], cyc[(t + 1) % k]
        w = emb.succ(v, q)
        while w != p:
            side_of[(v, w)] = 0 if frame > 0 else 1
            w = emb.succ(v, w)
        w = emb.succ(v, p)
        while w != q:
            side_of[(v, w)] = 1 if frame > 0 else 0
            w = emb.succ(v, w)
        if transport:
            frame *= emb.sign(v, q)
    out = []
    for comp in _components_avoiding(emb.graph, on_cycle):
        cs = set(comp)
        sides = {s for (v, w), s in side_of.items() if w in cs}
        out.append((comp, sides))
    return out


def _split_by_sides(emb: Rp2Embedding, cycle: Sequence[int], transport: bool) -> tuple[frozenset[int], frozenset[int]]:
    a: set[int] = set()
    b: set[int] = set()
    for comp, sides in _cycle_sides(emb, cycle, transport):
        if sides == {0}:
            a.update(comp)
        elif sides == {1}:
            b.update(comp)
    return _order_sides(a, b)


def sides_by_transport(emb: Rp2Embedding, cycle: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Sides of a 0-homologous cycle found by carrying a frame around it.

    Independent of the face-based :func:`disk_sides`; the two must agree.
    """
    if cycle_homology(emb, cycle) != 0:
        raise HomologyMismatch("cycle is 1-homologous")
    return _split_by_sides(emb, cycle, transport=True)


def is_separating_cycle_0(emb: Rp2Embedding, cycle: Sequence[int]) -> bool:
    a, b = disk_sides(emb, cycle)
    return bool(a) and bool(b)


def _could_separate(g: Graph, cycle: Sequence[int]) -> bool:
    return len(_components_avoiding(g, set(cycle))) >= 2


def separating_cycle(emb: Rp2Embedding, homology: int, cap: int = DEFAULT_CYCLE_CAP,
                     allowed: frozenset[Edge] | None = None) -> list[int] | None:
    """First cycle (in enumeration order) of the given homology that separates.

    ``allowed`` restricts attention to cycles of a subdrawing; sides are
    still read from the full drawing, which fixes where every vertex lies.
    """
    for cyc in simple_cycles(emb.graph, cap, allowed):
        if cycle_homology(emb, cyc) != homology or not _could_separate(emb.graph, cyc):
            continue
        if homology == 0:
            a, b = disk_sides(emb, cyc)
        else:
            a, b = sides_of_1hom_cycle(emb, cyc)
        if a and b:
            return cyc
    return None


def is_nonseparating_embedding(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    return separating_cycle(emb, 0, cap) is None


def sides_of_1hom_cycle(emb: Rp2Embedding, cycle: Sequence[int]) -> tuple[frozenset[int], frozenset[int]]:
    """Off-cycle vertices on the two sides of a one-sided cycle in the fixed drawing.

    A one-sided cycle has no global sides; the drawing's disk picture (all
    vertices inside, negative edges through the boundary) supplies them.
    Components of G - V(c) touching both sides are on neither.  Depends on
    the signature as given, not only on its switching class.
    """
    if cycle_homology(emb, cycle) != 1:
        raise HomologyMismatch("cycle is 0-homologous")
    return _split_by_sides(emb, cycle, transport=False)


def is_separating_1hom_cycle(emb: Rp2Embedding, cycle: Sequence[int]) -> bool:
    a, b = sides_of_1hom_cycle(emb, cycle)
    return bool(a) and bool(b)


def has_separating_1hom_cycle(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    return separating_cycle(emb, 1, cap) is not None


# -- Y-Delta surgery ---------------------------------------------------------


def y_delta_embedding(emb: Rp2Embedding, v: int) -> Rp2Embedding:
    """Replace degree-3 vertex ``v`` by a triangle drawn in a small disk around it.

    Neighbours are switched first so the three spokes are positive; each
    neighbour's slot for ``v`` is then replaced by its two triangle edges.
    A triangle edge parallel to an existing edge is dropped.
    """
    g = emb.graph
    if g.degree(v) != 3:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, not 3")
    for w in g.adj[v]:
        if emb.sign(v, w) < 0:
            emb = emb.switch(w)
    a, b, c = emb.rotation[v]
    new_rot: dict[int, list[int]] = {}
    added = []
    for p in (a, b, c):
        q, r = emb.succ(v, p), emb.pred(v, p)
        slot = []
        for x in (q, r):
            if not g.has_edge(p, x):
                slot.append(x)
        rot = list(emb.rotation[p])
        i = rot.index(v)
        new_rot[p] = rot[:i] + slot + rot[i + 1:]
    for p, q in ((a, b), (b, c), (c, a)):
        if not g.has_edge(p, q):
            added.append(norm_edge(p, q))
    keep = [u for u in range(g.n) if u != v]
    relabel = {u: i for i, u in enumerate(keep)}
    edges = {norm_edge(relabel[x], relabel[y]) for x, y in g.edges if v not in (x, y)}
    edges |= {norm_edge(relabel[x], relabel[y]) for x, y in added}
    rotation = []
    for u in keep:
        rot = new_rot.get(u, list(emb.rotation[u]))
        rotation.append(tuple(relabel[w] for w in rot))
    negative = {norm_edge(relabel[x], relabel[y]) for x, y in emb.negative if v not in (x, y)}
    out = Rp2Embedding(Graph(len(keep), frozenset(edges)), tuple(rotation), frozenset(negative))
    return out


# -- embedding search --------------------------------------------------------

# A face visit (v, a, b, d): the walk enters v from a and leaves to b, where
# b follows a in v's rotation (d = +1) or precedes it (d = -1).


class _Search:
    def __init__(self, g: Graph, max_genus: int, budget: int | None):
        self.g = g
        self.max_genus = max_genus
        self.budget = budget
        self.nodes = 0

    def run(self) -> Iterator[Rp2Embedding]:
        g = self.g
        if g.n == 0:
            return
        if not g.is_connected():
            raise EmbeddingError("embedding search needs a connected graph")
        if g.m == 0:
            yield Rp2Embedding(g, ((),), frozenset())
            return
        root = max(range(g.n), key=lambda v: (g.degree(v), -v))
        w = min(g.adj[root], key=lambda x: (-g.degree(x), x))
        rot = {root: [w], w: [root]}
        faces = [((root, w, w, 1), (w, root, root, 1))]
        placed = {norm_edge(root, w)}
        yield from self._grow(rot, frozenset(), faces, placed, 2)

    def _tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceeded(f"embedding search exceeded {self.budget} nodes")

    def _chord_options(self, faces, u, w, chi):
        opts = []
        twist = chi == 2 and self.max_genus >= 1
        for fi, f in enumerate(faces):
            us = [i for i, x in enumerate(f) if x[0] == u]
            if not us:
                continue
            ws = [j for j, x in enumerate(f) if x[0] == w]
            for i in us:
                for j in ws:
                    opts.append((fi, i, j, False))
                    if twist:
                        opts.append((fi, i, j, True))
        return opts

    def _grow(self, rot, neg, faces, placed, chi):
        self._tick()
        g = self.g
        if len(placed) == g.m:
            rotation = tuple(tuple(rot[v]) for v in range(g.n))
            yield Rp2Embedding(g, rotation, neg)
            return
        best = None
        for e in g.edges:
            if e in placed or e[0] not in rot or e[1] not in rot:
                continue
            opts = self._chord_options(faces, e[0], e[1], chi)
            if best is None or len(opts) < len(best[1]):
                best = (e, opts)
                if not opts:
                    return
        if best is not None:
            (u, w), opts = best
            for fi, i, j, twist in opts:
                yield from self._place_chord(rot, neg, faces, placed, chi, u, w, fi, i, j, twist)
            return
        # no chords: attach the outside vertex with most embedded neighbours
        cand = [x for x in range(g.n) if x not in rot and any(y in rot for y in g.adj[x])]
        x = max(cand, key=lambda c: (sum(y in rot for y in g.adj[c]), -c))
        u = min((y for y in g.adj[x] if y in rot), key=lambda y: (len(rot[y]), y))
        for fi, f in enumerate(faces):
            for i, visit in enumerate(f):
                if visit[0] == u:
                    yield from self._place_leaf(rot, neg, faces, placed, chi, u, x, fi, i)

    @staticmethod
    def _insert(rot, u, visit, w):
        _, a, b, d = visit
        r = list(rot[u])
        anchor = a if d > 0 else b
        r.insert(r.index(anchor) + 1, w)
        return r

    def _place_leaf(self, rot, neg, faces, placed, chi, u, x, fi, i):
        f = faces[fi]
        f = f[i:] + f[:i]
        _, a, b, d = f[0]
        rot2 = dict(rot)
        rot2[u] = self._insert(rot, u, f[0], x)
        rot2[x] = [u]
        nf = ((u, a, x, d), (x, u, u, d), (u, x, b, d)) + f[1:]
        faces2 = faces[:fi] + [nf] + faces[fi + 1:]
        yield from self._grow(rot2, neg, faces2, placed | {norm_edge(u, x)}, chi)

    def _place_chord(self, rot, neg, faces, placed, chi, u, w, fi, i, j, twist):
        f = faces[fi]
        L = len(f)
        f = f[i:] + f[:i]
        q = (j - i) % L
        _, a1, b1, d1 = f[0]
        _, a2, b2, d2 = f[q]
        rot2 = dict(rot)
        rot2[u] = self._insert(rot, u, f[0], w)
        rot2[w] = self._insert(rot, w, f[q], u)
        e = norm_edge(u, w)
        if not twist:
            sign = d1 * d2
            fa = ((u, a1, w, d1), (w, u, b2, d2)) + f[q + 1:]
            fb = ((w, a2, u, d2), (u, w, b1, d1)) + f[1:q]
            faces2 = faces[:fi] + [fa, fb] + faces[fi + 1:]
            chi2 = chi
        else:
            sign = -d1 * d2
            back = tuple((v, y, x, -dd) for (v, x, y, dd) in reversed(f[1:q]))
            nf = ((u, a1, w, d1), (w, u, a2, -d2)) + back + ((u, b1, w, -d1), (w, u, b2, d2)) + f[q + 1:]
            faces2 = faces[:fi] + [nf] + faces[fi + 1:]
            chi2 = chi - 1
        neg2 = neg | {e} if sign < 0 else neg
        yield from self._grow(rot2, neg2, faces2, placed | {e}, chi2)


def enumerate_rp2_embeddings(g: Graph, budget: int | None = None, max_genus: int = 1,
                             dedupe: bool = True) -> Iterator[Rp2Embedding]:
    """Embeddings of a connected graph in the sphere or projective plane.

    Signatures are normalized on a spanning tree; with ``dedupe`` each
    embedding is yielded once up to switching and reflection.  ``budget``
    bounds the number of search nodes.
    """
    seen = set()
    for emb in _Search(g, max_genus, budget).run():
        if dedupe:
            k = emb.key()
            if k in seen:
                continue
            seen.add(k)
        yield emb


def find_embedding(g: Graph, max_genus: int = 1, budget: int | None = None) -> Rp2Embedding | None:
    return next(_Search(g, max_genus, budget).run(), None)


# -- .emb text format ----------------------------------------------------------


def parse_emb(text: str) -> Rp2Embedding:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    data = [ln for ln in lines if ln]
    if not data:
        raise EmbeddingError("empty embedding file")
    try:
        n, m = map(int, data[0].split())
    except ValueError:
        raise EmbeddingError(f"bad header {data[0]!r}") from None
    rotation: dict[int, tuple[int, ...]] = {}
    negative = set()
    for ln in data[1:]:
        tag, _, rest = ln.partition(" ")
        try:
            if tag == "r":
                head, _, tail = rest.partition(":")
                rotation[int(head)] = tuple(int(x) for x in tail.split())
            elif tag == "s":
                u, v, mark = rest.split()
                if mark != "-":
                    raise EmbeddingError(f"bad signature line {ln!r}")
                negative.add(norm_edge(int(u), int(v)))
            else:
                raise EmbeddingError(f"unknown line {ln!r}")
        except ValueError:
            raise EmbeddingError(f"bad line {ln!r}") from None
    if set(rotation) != set(range(n)):
        raise EmbeddingError("rotation lines must cover vertices 0..n-1")
    edges = set()
    for v, r in rotation.items():
        for w in r:
            if not 0 <= w < n or w == v:
                raise EmbeddingError(f"bad neighbour {w} of {v}")
            edges.add(norm_edge(v, w))
    if len(edges) != m:
        raise EmbeddingError(f"header says {m} edges, rotations give {len(edges)}")
    try:
        g = Graph(n, frozenset(edges))
    except GraphError as exc:
        raise EmbeddingError(str(exc)) from None
    emb = Rp2Embedding(g, tuple(rotation[v] for v in range(n)), frozenset(negative))
    emb.validate()
    return emb


def format_emb(emb: Rp2Embedding, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {ln}" for ln in comment.splitlines())
    out.append(f"{emb.graph.n} {emb.graph.m}")
    for v, r in enumerate(emb.rotation):
        out.append(f"r {v}: " + " ".join(map(str, r)))
    for u, v in sorted(emb.negative):
        out.append(f"s {u} {v} -")
    return "\n".join(out) + "\n"


def read_emb(path: str | Path) -> Rp2Embedding:
    return parse_emb(Path(path).read_text())


def write_emb(emb: Rp2Embedding, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_emb(emb, comment))


def embedding_from_cycles(g: Graph, rotation: dict[int, Sequence[int]], negative: Iterable[Sequence[int]] = ()) -> Rp2Embedding:
    emb = Rp2Embedding(g, tuple(tuple(rotation[v]) for v in range(g.n)), frozenset(norm_edge(*e) for e in negative))
    emb.validate()
    return emb


def all_switchings(emb: Rp2Embedding) -> Iterator[Rp2Embedding]:
    """Every signature representation of the same embedding (vertex 0 never switched)."""
    n = emb.graph.n
    for mask in range(1 << max(0, n - 1)):
        e = emb
        for v in range(1, n):
            if mask >> (v - 1) & 1:
                e = e.switch(v)
        yield e




# -- surface decision ----------------------------------------------------------


def _reduce(g: Graph) -> Graph:
    """Drop vertices of degree at most one and suppress degree-two vertices.

    Neither operation changes which surfaces the graph embeds in.
    """
    adj = {v: set(g.adj[v]) for v in range(g.n)}
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if d <= 1:
                for w in adj.pop(v):
                    adj[w].discard(v)
                changed = True
            elif d == 2:
                a, b = adj.pop(v)
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                changed = True
    keep = sorted(adj)
    idx = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), frozenset(norm_edge(idx[v], idx[w]) for v in keep for w in adj[v] if v < w))


def _blocks(g: Graph) -> list[Graph]:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    out = []
    for comp in nx.biconnected_components(h):
        vs = sorted(comp)
        if len(vs) >= 3:
            out.append(g.induced(vs))
    return out


def _block_genus(b: Graph, budget: int | None) -> int:
    if b.n <= 4:
        return 0
    if b.m > 3 * b.n - 3:
        return 2
    planar_ok = b.m <= 3 * b.n - 6
    if not b.triangles():
        planar_ok = planar_ok and b.m <= 2 * b.n - 4
        if b.m > 2 * b.n - 2:
            return 2
    if planar_ok and find_embedding(b, 0, budget) is not None:
        return 0
    return 1 if find_embedding(b, 1, budget) is not None else 2


def euler_genus_class(g: Graph, budget: int | None = None) -> int:
    """0 if planar, 1 if projective-planar but not planar, 2 otherwise."""
    total = 0
    r = _reduce(g)
    for b in _blocks(r):
        rb = _reduce(b)
        if rb.m == b.m and rb.n == b.n:
            total += _block_genus(b, budget)
        else:
            total += euler_genus_class(rb, budget)
        if total >= 2:
            return 2
    return total


def is_planar_embeddable(g: Graph, budget: int | None = None) -> bool:
    return euler_genus_class(g, budget) == 0


def is_rp2_embeddable(g: Graph, budget: int | None = None) -> bool:
    return euler_genus_class(g, budget) <= 1

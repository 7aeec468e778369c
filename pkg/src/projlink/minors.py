"""Minor containment with branch-set certificates, and surface tests by forbidden minors.

The search contracts host edges depth first and, at every contracted host,
looks for the pattern as a subgraph.  Deletions never need to be branched
on: a minor is a subgraph of some contraction.  Contracted hosts are
memoized by canonical form, so isomorphic contractions are explored once.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

from .graph import (CANONICAL_LIMIT, Graph, GraphError, canonical_form, complete_bipartite,
                    complete_graph, norm_edge, read_el)


class MinorSearchExhausted(RuntimeError):
    """The node budget ran out before the search could decide."""


class CatalogMissing(FileNotFoundError):
    pass


class CatalogInvalid(ValueError):
    pass


DEFAULT_BUDGET = 2_000_000

# (host code, pattern code) pairs known to be minor-free.  Only an
# optimization: a lost write just repeats work.
_ABSENT: set[tuple[bytes, bytes]] = set()


@dataclass(frozen=True)
class MinorCertificate:
    branch_sets: tuple[frozenset[int], ...]

    def __getitem__(self, a: int) -> frozenset[int]:
        return self.branch_sets[a]

    def as_dict(self) -> dict[int, list[int]]:
        return {a: sorted(s) for a, s in enumerate(self.branch_sets)}


def verify_certificate(host: Graph, pattern: Graph, cert: MinorCertificate | Mapping[int, Iterable[int]]) -> bool:
    if isinstance(cert, MinorCertificate):
        sets = [set(s) for s in cert.branch_sets]
    else:
        if set(cert) != set(range(pattern.n)):
            return False
        sets = [set(cert[a]) for a in range(pattern.n)]
    if len(sets) != pattern.n:
        return False
    used: set[int] = set()
    for s in sets:
        if not s or used & s or not all(0 <= v < host.n for v in s):
            return False
        used |= s
        start = next(iter(s))
        seen, stack = {start}, [start]
        while stack:
            x = stack.pop()
            for y in host.adj[x]:
                if y in s and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != s:
            return False
    for a, b in pattern.edges:
        if not any(host.adj_mask[x] & _mask(sets[b]) for x in sets[a]):
            return False
    return True


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


# -- subgraph monomorphism -----------------------------------------------------


def _pattern_order(p: Graph) -> list[int]:
    order: list[int] = []
    rest = set(range(p.n))
    while rest:
        placed = set(order)
        v = max(rest, key=lambda x: (len(p.adj[x] & placed), p.degree(x), -x))
        order.append(v)
        rest.discard(v)
    return order


def find_monomorphism(pattern: Graph, host: Graph) -> dict[int, int] | None:
    """Injective map V(pattern) -> V(host) sending edges to edges, if any."""
    if pattern.n > host.n or pattern.m > host.m:
        return None
    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    back = [[pos[w] for w in pattern.adj[v] if pos[w] < i] for i, v in enumerate(order)]
    need = [pattern.degree(v) for v in order]
    hadj = host.adj_mask
    hdeg = host.degrees()
    ok_deg = [_mask(x for x in range(host.n) if hdeg[x] >= d) for d in range(max(need, default=0) + 1)]
    img = [0] * len(order)
    full = (1 << host.n) - 1

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        cand = ok_deg[need[i]] & ~used & full
        for j in back[i]:
            cand &= hadj[img[j]]
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            img[i] = x
            if rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    if rec(0, 0):
        return {order[i]: img[i] for i in range(len(order))}
    return None


# -- minor search ----------------------------------------------------------------


def _code(g: Graph) -> bytes:
    if g.n <= CANONICAL_LIMIT:
        return canonical_form(g)
    return b"L" + repr(sorted(g.edges)).encode()


class _MinorSearch:
    def __init__(self, pattern: Graph, budget: int | None):
        self.p = pattern
        self.pcode = _code(pattern)
        self.budget = budget
        self.nodes = 0
        self.seen: set[bytes] = set()
        self.trim = min(pattern.degrees(), default=0) >= 3

    def _trim(self, g: Graph, branch: list[frozenset[int]]) -> tuple[Graph, list[frozenset[int]]]:
        """Remove vertices of degree <= 1 and contract away degree-2 vertices.

        Valid when every pattern vertex has degree at least three: a vertex
        of degree <= 2 is then a leaf of its branch set or unused, so any
        minor model can be rearranged to survive the operation.
        """
        while True:
            low = next((v for v in range(g.n) if g.degree(v) <= 2), None)
            if low is None:
                return g, branch
            if g.degree(low) <= 1:
                keep = [v for v in range(g.n) if v != low]
                g = g.induced(keep)
                branch = [branch[v] for v in keep]
            else:
                w = min(g.adj[low])
                g, branch = _contract(g, branch, (low, w))

    def run(self, host: Graph) -> MinorCertificate | None:
        branch = [frozenset([v]) for v in range(host.n)]
        if self.trim:
            host, branch = self._trim(host, branch)
        return self._search(host, branch)

    def _search(self, g: Graph, branch: list[frozenset[int]]) -> MinorCertificate | None:
        p = self.p
        if g.n < p.n or g.m < p.m:
            return None
        code = _code(g)
        if code in self.seen or (code, self.pcode) in _ABSENT:
            return None
        self.seen.add(code)
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise MinorSearchExhausted(f"minor search exceeded {self.budget} nodes")
        phi = find_monomorphism(p, g)
        if phi is not None:
            return MinorCertificate(tuple(branch[phi[a]] for a in range(p.n)))
        if g.n > p.n:
            for e in sorted(g.edges, key=lambda e: (len(g.adj[e[0]] & g.adj[e[1]]), e)):
                h, hb = _contract(g, branch, e)
                if self.trim:
                    h, hb = self._trim(h, hb)
                cert = self._search(h, hb)
                if cert is not None:
                    return cert
        _ABSENT.add((code, self.pcode))
        return None


def _contract(g: Graph, branch: list[frozenset[int]], e: Sequence[int]) -> tuple[Graph, list[frozenset[int]]]:
    u, v = norm_edge(*e)
    mapping = [x if x < v else x - 1 for x in range(g.n)]
    mapping[v] = u
    h = g.relabel(mapping, g.n - 1)
    hb = [branch[x] for x in range(g.n) if x != v]
    hb[u] = branch[u] | branch[v]
    return h, hb


def has_minor(host: Graph, pattern: Graph, budget: int | None = DEFAULT_BUDGET) -> MinorCertificate | None:
    """A branch-set certificate for ``pattern`` as a minor of ``host``, or None.

    Raises :class:`MinorSearchExhausted` if more than ``budget`` distinct
    contracted hosts would be needed.
    """
    if pattern.n == 0:
        return MinorCertificate(())
    if pattern.n > host.n or pattern.m > host.m:
        return None
    return _MinorSearch(pattern, budget).run(host)


def minor_free(host: Graph, patterns: Iterable[Graph], budget: int | None = DEFAULT_BUDGET) -> bool:
    return all(has_minor(host, p, budget) is None for p in patterns)


def is_planar(g: Graph) -> bool:
    return minor_free(g, (complete_graph(5), complete_bipartite(3, 3)))


def is_outerplanar(g: Graph) -> bool:
    return minor_free(g, (complete_graph(4), complete_bipartite(2, 3)))


# -- obstruction catalogs ------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    file: str
    expected_vertices: int
    expected_edges: int
    provenance: str


@dataclass
class ObstructionSet:
    name: str
    graphs: list[Graph]
    provenance: str
    entries: list[CatalogEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.graphs)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def check_distinct(self) -> None:
        codes = [canonical_form(g) for g in self.graphs]
        if len(set(codes)) != len(codes):
            raise CatalogInvalid(f"{self.name}: isomorphic members")

    def first_minor(self, g: Graph, budget: int | None = DEFAULT_BUDGET) -> tuple[Graph, MinorCertificate] | None:
        for h in sorted(self.graphs, key=lambda h: (h.n, h.m)):
            cert = has_minor(g, h, budget)
            if cert is not None:
                return h, cert
        return None


def read_manifest(path: str | Path) -> list[CatalogEntry]:
    path = Path(path)
    if not path.is_file():
        raise CatalogMissing(f"no manifest at {path}")
    out = []
    with path.open(newline="") as fh:
        rows = [r for r in csv.reader(fh, delimiter="\t") if r and not r[0].startswith("#")]
    if not rows or rows[0][:5] != ["name", "file", "expected_vertices", "expected_edges", "provenance"]:
        raise CatalogInvalid(f"{path}: bad manifest header")
    for r in rows[1:]:
        if len(r) < 5:
            raise CatalogInvalid(f"{path}: short row {r}")
        out.append(CatalogEntry(r[0], r[1], int(r[2]), int(r[3]), r[4]))
    return out


def load_obstruction_set(directory: str | Path, name: str | None = None, expected_count: int | None = None) -> ObstructionSet:
    directory = Path(directory)
    entries = read_manifest(directory / "manifest.tsv")
    graphs = []
    for ent in entries:
        f = directory / ent.file
        if not f.is_file():
            raise CatalogMissing(f"missing catalog file {f}")
        try:
            g = read_el(f).named(ent.name)
        except GraphError as exc:
            raise CatalogInvalid(f"{f}: {exc}") from None
        if (g.n, g.m) != (ent.expected_vertices, ent.expected_edges):
            raise CatalogInvalid(f"{ent.name}: expected {ent.expected_vertices}/{ent.expected_edges}, got {g.n}/{g.m}")
        graphs.append(g)
    provs = sorted({e.provenance for e in entries})
    obs = ObstructionSet(name or directory.name, graphs, "; ".join(provs), entries)
    obs.check_distinct()
    if expected_count is not None and len(obs) != expected_count:
        raise CatalogInvalid(f"{obs.name}: expected {expected_count} graphs, found {len(obs)}")
    return obs


def default_data_dir() -> Path:
    """./data when it holds a manifest, else the data directory of the source checkout."""
    local = Path("data")
    if (local / "manifest.tsv").is_file():
        return local
    return Path(__file__).resolve().parents[2] / "data"


_PP_CACHE: dict[str, ObstructionSet] = {}


def projective_obstructions(catalog: str | Path | None = None) -> ObstructionSet:
    d = Path(catalog) if catalog is not None else default_data_dir()
    d = d / "projective_obstructions" if (d / "projective_obstructions").is_dir() else d
    key = str(d.resolve())
    if key not in _PP_CACHE:
        _PP_CACHE[key] = load_obstruction_set(d, "projective-plane obstructions", expected_count=35)
    return _PP_CACHE[key]


def is_projective_planar(g: Graph, catalog: str | Path | ObstructionSet | None = None,
                         budget: int | None = DEFAULT_BUDGET) -> bool:
    obs = catalog if isinstance(catalog, ObstructionSet) else projective_obstructions(catalog)
    return obs.first_minor(g, budget) is None

"""Link conditions for a fixed projective-plane drawing f(G).

For G drawn in the projective plane and two extra vertices placed on either
side of it in projective space, the absence of nonsplit links in
f(G + two vertices) reduces to combinatorial facts about f(G):

* no link of two 0-homologous cycles  <->  f(G) is nonseparating
* no 0/1 link (given nonseparating)    <->  no separating 1-homologous cycle
* no link of two 1-homologous cycles  <->  negative edges pairwise meet

The negative-edge predicates depend on the fixed signature, not just on its
switching class, so they are evaluated on the drawing exactly as given.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .embedding import (DEFAULT_CYCLE_CAP, EmbeddingError, Rp2Embedding, cycle_homology, disk_sides,
                        enumerate_rp2_embeddings, separating_cycle, sides_of_1hom_cycle)
from .graph import Edge, Graph, GraphError, norm_edge, prism_graph, wheel_graph
from .minors import find_monomorphism, is_outerplanar, is_planar


class PreconditionViolated(ValueError):
    pass


class CaseMismatch(ValueError):
    pass


# -- cases ------------------------------------------------------------------


@dataclass(frozen=True)
class Star:
    v0: int

    def __str__(self):
        return f"Star({self.v0})"


@dataclass(frozen=True)
class Triangle:
    v0: int
    v1: int
    v2: int

    def __str__(self):
        return f"Triangle({self.v0},{self.v1},{self.v2})"


@dataclass(frozen=True)
class Neither:
    def __str__(self):
        return "Neither"


Case = Star | Triangle | Neither


def classify_case(emb: Rp2Embedding) -> Case:
    neg = sorted(emb.negative)
    if not neg:
        return Star(0)
    common = set(neg[0])
    for e in neg[1:]:
        common &= set(e)
    if common:
        return Star(min(common))
    if len(neg) == 3:
        vs = sorted({v for e in neg for v in e})
        if len(vs) == 3:
            return Triangle(*vs)
    return Neither()


def disjoint_negative_pair(emb: Rp2Embedding) -> tuple[Edge, Edge] | None:
    for e, f in itertools.combinations(sorted(emb.negative), 2):
        if not set(e) & set(f):
            return e, f
    return None


# -- the three conditions ---------------------------------------------------


def _fmt_cycle(c: Sequence[int]) -> str:
    return "-".join(map(str, c))


def no_link_00(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> tuple[bool, list[int] | None]:
    """(True, None) if f(G) is nonseparating, else (False, separating 0-homologous cycle)."""
    emb.validate()
    c = separating_cycle(emb, 0, cap)
    return c is None, c


def no_link_01(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> tuple[bool, list[int] | None]:
    ok, _ = no_link_00(emb, cap)
    if not ok:
        raise PreconditionViolated("drawing has a separating 0-homologous cycle")
    c = separating_cycle(emb, 1, cap)
    return c is None, c


def no_link_11(emb: Rp2Embedding) -> tuple[bool, tuple[Edge, Edge] | None]:
    pair = disjoint_negative_pair(emb)
    ok = not isinstance(classify_case(emb), Neither)
    if ok != (pair is None):
        raise AssertionError("case classification disagrees with the pairwise test")
    return ok, pair


# -- case reductions -------------------------------------------------------------


def _nonseparating_within(emb: Rp2Embedding, drop: Iterable[Edge], cap: int) -> bool:
    """Is the subdrawing f(G - drop) nonseparating?

    The subdrawing keeps every vertex where f put it, so each of its cycles
    has the same sides as in f(G).  Sides are therefore read from the full
    drawing, which also copes with the subgraph being disconnected.
    """
    keep = emb.graph.edges - {norm_edge(*e) for e in drop}
    return separating_cycle(emb, 0, cap, allowed=frozenset(keep)) is None


def case1_reduced_edge_sets(emb: Rp2Embedding) -> tuple[set[Edge], set[Edge]]:
    case = classify_case(emb)
    if not isinstance(case, Star):
        raise CaseMismatch(f"drawing is {case}, not a star")
    v0 = case.v0
    at = {norm_edge(v0, w) for w in emb.graph.adj[v0]}
    v1 = {e for e in at if e in emb.negative}
    return at - v1, v1


def case1_no_link_00(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    """f(G - V0) and f(G - V1) both nonseparating (V0/V1: positive/negative edges at v0)."""
    v0_edges, v1_edges = case1_reduced_edge_sets(emb)
    return _nonseparating_within(emb, v0_edges, cap) and _nonseparating_within(emb, v1_edges, cap)


def case2_no_link_00(emb: Rp2Embedding, cap: int = DEFAULT_CYCLE_CAP) -> bool:
    """All three drawings with one negative triangle edge removed are nonseparating."""
    case = classify_case(emb)
    if not isinstance(case, Triangle):
        raise CaseMismatch(f"drawing is {case}, not a triangle")
    return all(_nonseparating_within(emb, [e], cap) for e in sorted(emb.negative))


def reduced_drawing(emb: Rp2Embedding, drop: Iterable[Sequence[int]]) -> Rp2Embedding:
    """The subdrawing with some edges removed (may be disconnected or non-cellular)."""
    return emb.delete_edges(drop)


# -- nonseparating planar graphs ----------------------------------------------------


@dataclass(frozen=True)
class NPClass:
    name: str
    detail: tuple = ()

    def __str__(self):
        return self.name if not self.detail else f"{self.name}{self.detail}"


OUTERPLANAR = "Outerplanar"
WHEEL = "Wheel"
PRISM = "ElongatedTriangularPrism"


def wheel_hub(g: Graph) -> int | None:
    """A vertex h with G - h a subgraph of a cycle through all other vertices."""
    if g.n < 4:
        return None
    rim = wheel_graph(g.n - 1)
    phi = find_monomorphism(g, rim)
    return None if phi is None else next(v for v, x in phi.items() if x == 0)


def prism_lengths(g: Graph) -> tuple[int, int, int] | None:
    """Rung lengths of an elongated triangular prism containing G as a spanning subgraph."""
    extra = g.n - 6
    if extra < 0:
        return None
    for a in range(extra + 1):
        for b in range(a, extra - a + 1):
            c = extra - a - b
            if c < b:
                continue
            lengths = (a + 1, b + 1, c + 1)
            if find_monomorphism(g, prism_graph(lengths)) is not None:
                return lengths
    return None


def nonseparating_planar_class(g: Graph) -> NPClass | None:
    if not is_planar(g):
        raise GraphError("graph is not planar")
    if is_outerplanar(g):
        return NPClass(OUTERPLANAR)
    h = wheel_hub(g)
    if h is not None:
        return NPClass(WHEEL, (h,))
    lengths = prism_lengths(g)
    if lengths is not None:
        return NPClass(PRISM, lengths)
    return None


def has_nonseparating_planar_drawing(g: Graph, budget: int | None = None) -> bool:
    """Search all planar embeddings of a connected graph for a nonseparating one."""
    if not g.is_connected():
        raise EmbeddingError("need a connected graph")
    for emb in enumerate_rp2_embeddings(g, budget=budget, max_genus=0):
        if separating_cycle(emb, 0) is None:
            return True
    return False


# -- reports ----------------------------------------------------------------------


@dataclass
class LinkReport:
    no_link_00: bool
    no_link_01: bool | None
    no_link_11: bool
    case: Case
    notes: list[str] = field(default_factory=list)
    drawing: str = ""

    HEADER = ("drawing", "no_link_00", "no_link_01", "no_link_11", "case", "witness")

    @staticmethod
    def _b(x: bool | None) -> str:
        return "n/a" if x is None else ("true" if x else "false")

    def row(self) -> str:
        return "\t".join([self.drawing, self._b(self.no_link_00), self._b(self.no_link_01),
                          self._b(self.no_link_11), str(self.case), ";".join(self.notes) or "-"])

    @property
    def ok(self) -> bool:
        return self.no_link_00 and bool(self.no_link_01) and self.no_link_11


def link_report(emb: Rp2Embedding, name: str = "", cap: int = DEFAULT_CYCLE_CAP) -> LinkReport:
    ok00, c00 = no_link_00(emb, cap)
    notes = []
    ok01 = None
    if ok00:
        ok01, c01 = no_link_01(emb, cap)
        if not ok01:
            notes.append(f"01:{_fmt_cycle(c01)}")
    else:
        notes.append(f"00:{_fmt_cycle(c00)}")
    ok11, pair = no_link_11(emb)
    if pair is not None:
        notes.append(f"11:{pair[0][0]}-{pair[0][1]}|{pair[1][0]}-{pair[1][1]}")
    return LinkReport(ok00, ok01, ok11, classify_case(emb), notes, name)


def verify_witness(emb: Rp2Embedding, note: str) -> bool:
    """Recheck a report witness with the primitive side and homology predicates."""
    kind, _, body = note.partition(":")
    if kind in ("00", "01"):
        cyc = [int(x) for x in body.split("-")]
        h = cycle_homology(emb, cyc)
        if h != int(kind[1]):
            return False
        a, b = disk_sides(emb, cyc) if h == 0 else sides_of_1hom_cycle(emb, cyc)
        return bool(a) and bool(b)
    if kind == "11":
        (e1, e2) = [tuple(int(x) for x in part.split("-")) for part in body.split("|")]
        return (norm_edge(*e1) in emb.negative and norm_edge(*e2) in emb.negative
                and not set(e1) & set(e2))
    return False

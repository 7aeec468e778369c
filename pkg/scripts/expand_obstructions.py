"""Grow a list of minor-minimal non-projective-planar graphs by local moves.

    python3 scripts/expand_obstructions.py /tmp/found*.txt > /tmp/expanded.txt
    python3 scripts/expand_obstructions.py --property outer /tmp/outer*.txt > /tmp/outer_expanded.txt

Starting from the given hits plus a few constructed seeds (two-vertex
gluings of K5 and K3,3, or disjoint pairs of K4 and K2,3 for the outer
property), apply Delta-Y at every triangle and Y-Delta at every degree-3
vertex, keep the results that are minimal obstructions, and repeat until
nothing new turns up.  Delta-Y cannot create a projective embedding
(Y-Delta surgery on an embedding would undo it), and the same holds for
the outer property through the cone, so the closure stays inside the
non-embeddable graphs; minimality is checked directly.  This is not an
exhaustive search: it only reaches obstructions connected to the seeds by
these moves.
"""

import argparse
import itertools
import logging
import sys

from projlink.graph import (Graph, canonical_form, canonical_graph, complete_bipartite, complete_graph, delete_edge,
                            disjoint_union)
from projlink.transforms import delta_y, y_delta

sys.path.insert(0, __file__.rsplit("/", 1)[0])
from exhaustive_obstructions import is_minimal_obstruction  # noqa: E402
from build_catalog import read_hits  # noqa: E402

log = logging.getLogger("expand")


def glue_two(a: Graph, b: Graph) -> list[Graph]:
    """Identify a pair of vertices of a with a pair of b, with and without the edge between them."""
    out = []
    for i, j in itertools.permutations(range(b.n), 2):
        rest = [x for x in range(b.n) if x not in (i, j)]
        m = {i: 0, j: 1}
        m.update({x: a.n + k for k, x in enumerate(rest)})
        edges = set(a.edges) | {tuple(sorted((m[u], m[v]))) for u, v in b.edges}
        g = Graph.from_edges(a.n + b.n - 2, sorted(edges))
        out.append(g)
        if (0, 1) in g.edges:
            out.append(delete_edge(g, (0, 1)))
    return out


def neighbours(g: Graph) -> list[Graph]:
    out = [delta_y(g, t) for t in g.triangles()]
    out += [y_delta(g, v) for v in range(g.n) if g.degree(v) == 3]
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("hits", nargs="*")
    ap.add_argument("--max-vertices", type=int, default=14)
    ap.add_argument("--property", choices=("projective", "outer"), default="projective")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stderr)

    outer = args.property == "outer"
    min_degree = 2 if outer else 3
    seeds = list(read_hits(args.hits))
    if outer:
        small = [complete_graph(4), complete_bipartite(2, 3)]
        seeds += [disjoint_union(a, b) for a, b in itertools.combinations_with_replacement(small, 2)]
    else:
        kur = [complete_graph(5), complete_bipartite(3, 3)]
        # glue on K5 vertices 0,1 (adjacent) and on K3,3 pairs 0,1 (same side) and 0,3 (opposite sides)
        for a, pa in ((kur[0], (0, 1)), (kur[1], (0, 1)), (kur[1], (0, 3))):
            order = list(pa) + [x for x in range(a.n) if x not in pa]
            a2 = a.relabel([order.index(x) for x in range(a.n)], a.n)
            for b in kur:
                seeds += glue_two(a2, b)

    known: dict[bytes, Graph] = {}
    tested: set[bytes] = set()
    frontier = []
    for g in seeds:
        c = canonical_form(g)
        if c in tested:
            continue
        tested.add(c)
        if is_minimal_obstruction(g, outer):
            known[c] = canonical_graph(g)
            frontier.append(known[c])
    log.info("%d seeds are minimal obstructions", len(known))
    start = set(canonical_form(g) for g in read_hits(args.hits))
    while frontier:
        nxt = []
        for g in frontier:
            for h in neighbours(g):
                if h.n > args.max_vertices or min(h.degrees(), default=0) < min_degree:
                    continue
                c = canonical_form(h)
                if c in tested:
                    continue
                tested.add(c)
                if is_minimal_obstruction(h, outer):
                    known[c] = canonical_graph(h)
                    nxt.append(known[c])
                    log.info("new: %d vertices, %d edges", h.n, h.m)
        frontier = nxt
    for c, g in sorted(known.items(), key=lambda kv: (kv[1].n, kv[1].m, kv[0])):
        if c not in start:
            print(g.n, " ".join(f"{u}-{v}" for u, v in g.sorted_edges()), flush=True)
    log.info("%d minimal obstructions in the closure, %d not among the inputs", len(known),
             len(set(known) - start))


if __name__ == "__main__":
    main()

"""Derive the minor-minimal graphs that do not embed in the projective plane.

Seeds that fail to embed are shrunk by single deletions and contractions
until every one-step minor embeds.  Seeds come from gluing Kuratowski
graphs, from Delta-Y images and vertex splits of graphs already found, and
from random dense graphs.  Every new graph is rechecked for minimality and
appended to the --found file; the run ends at the time limit.
scripts/build_catalog.py merges these finds with the exhaustive sweep.

    python3 scripts/derive_obstructions.py --found /tmp/derived.txt --time-limit 1800
"""

from __future__ import annotations

import argparse
import itertools
import logging
import random
import time
from pathlib import Path

from projlink.embedding import euler_genus_class
from projlink.graph import (Graph, canonical_form, canonical_graph, complete_bipartite, complete_graph,
                            contract_edge, dedupe, delete_edge, disjoint_union, norm_edge)
from projlink.transforms import delta_y, enumerate_vertex_splits, y_delta

log = logging.getLogger("derive")


def bad(g: Graph) -> bool:
    return euler_genus_class(g) >= 2


def strip(g: Graph) -> Graph:
    return g.induced([v for v in range(g.n) if g.degree(v) > 0])


def one_step_minors(g: Graph) -> list[Graph]:
    out = []
    for e in g.sorted_edges():
        out.append(strip(delete_edge(g, e)))
        out.append(strip(contract_edge(g, e)))
    return out


def minimize(g: Graph, rng: random.Random) -> Graph:
    g = strip(g)
    while True:
        steps = one_step_minors(g)
        rng.shuffle(steps)
        for h in steps:
            if bad(h):
                g = h
                break
        else:
            return g


def is_minimal(g: Graph) -> bool:
    return bad(g) and all(not bad(h) for h in one_step_minors(g))


def glue(a: Graph, b: Graph, pairs: list[tuple[int, int]], drop: list[tuple[int, int]] = ()) -> Graph:
    """Disjoint union with b's vertex q identified to a's vertex p for each (p, q)."""
    u = disjoint_union(a, b)
    mapping = list(range(u.n))
    for p, q in pairs:
        mapping[a.n + q] = p
    keep = sorted(set(mapping))
    idx = {v: i for i, v in enumerate(keep)}
    edges = {norm_edge(idx[mapping[x]], idx[mapping[y]]) for x, y in u.edges if mapping[x] != mapping[y]}
    edges -= {norm_edge(idx[x], idx[y]) for x, y in drop}
    return Graph(len(keep), frozenset(edges))


def kuratowski_seeds() -> list[Graph]:
    k5, k33 = complete_graph(5), complete_bipartite(3, 3)
    out = []
    for a, b in itertools.combinations_with_replacement([k5, k33], 2):
        out.append(disjoint_union(a, b))
        out.append(glue(a, b, [(0, 0)]))
        for q in range(1, b.n):
            out.append(glue(a, b, [(0, 0), (1, q)]))
            if b.has_edge(0, q):
                out.append(glue(a, b, [(0, 0), (1, q)], drop=[(0, 1)]))
        for q1, q2 in itertools.permutations(range(1, b.n), 2):
            out.append(glue(a, b, [(0, 0), (1, q1), (2, q2)]))
    return out


def derived_seeds(found: dict[bytes, Graph]) -> list[Graph]:
    out = []
    for g in list(found.values()):
        for t in g.triangles():
            out.append(delta_y(g, t))
        for v in range(g.n):
            if g.degree(v) == 3:
                out.append(y_delta(g, v))
        if g.n < 12:
            out.extend(enumerate_vertex_splits(g))
    return out


def neighbour_seeds(found: dict[bytes, Graph]) -> list[Graph]:
    """Edge additions and vertex splits of the one-step minors of found graphs."""
    out = []
    for g in list(found.values()):
        for m in dedupe(one_step_minors(g)):
            out.extend(m.add_edge(*e) for e in m.non_edges())
            out.extend(enumerate_vertex_splits(m))
    return out


def random_seed(rng: random.Random) -> Graph:
    n = rng.randint(7, 12)
    p = rng.uniform(0.3, 0.8)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--found", type=Path, required=True, help="append each new graph here as 'n u-v ...'")
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--tries", type=int, default=3, help="minimization restarts per seed")
    ap.add_argument("--time-limit", type=float, default=1800.0, help="seconds before giving up on new finds")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    rng = random.Random(args.seed)
    found: dict[bytes, Graph] = {}
    tried: set[bytes] = set()
    t0 = time.time()
    out = args.found.open("a")

    def consider(seeds):
        for s in seeds:
            if time.time() - t0 > args.time_limit:
                return True
            s = strip(s)
            if s.n > 16:
                continue
            c = canonical_form(s)
            if c in tried or not bad(s):
                continue
            tried.add(c)
            for _ in range(args.tries):
                m = canonical_graph(minimize(s, rng))
                k = canonical_form(m)
                if k not in found:
                    assert is_minimal(m), m
                    found[k] = m
                    out.write(f"{m.n} " + " ".join(f"{u}-{v}" for u, v in m.sorted_edges()) + "\n")
                    out.flush()
                    log.info("found %d: %d vertices, %d edges (%.0fs)", len(found), m.n, m.m, time.time() - t0)
        return False

    done = consider(kuratowski_seeds())
    while not done:
        before = len(found)
        done = consider(derived_seeds(found))
        if not done and len(found) == before:
            done = consider(neighbour_seeds(found))
        if not done and len(found) == before:
            done = consider(random_seed(rng) for _ in range(200))
    log.info("stopped after %.0fs with %d graphs", time.time() - t0, len(found))


if __name__ == "__main__":
    main()

"""Sweep graph6 input for minor-minimal graphs without a projective-plane property.

Feed it the output of nauty's geng, e.g.

    geng -C -d3 -q 9 15:25 | python3 scripts/exhaustive_obstructions.py > found9.txt
    geng -c -d2 -q 8 0:17 | python3 scripts/exhaustive_obstructions.py --property outer > outer8.txt

Each hit is written as one line: n, then the edge list.  A graph is a hit
when it lacks the property while every single edge deletion and every
single contraction has it.  With ``--property projective`` the property is
Euler genus at most one; with ``--property outer`` it is embedding in the
projective plane with every vertex on one face, tested as projective
planarity of the cone G + K1.

Ranges behind data/: projective, every edge count for n = 7..9, m <= 18
for n = 10 and 11, m = 18 for n = 12; outer, every edge count for n <= 8,
m <= 15 for n = 9, m <= 13 for n = 10.  expand_obstructions.py then closes
the hits under Delta-Y and Y-Delta.
"""

import argparse
import logging
import sys
import time

import networkx as nx

from projlink.embedding import euler_genus_class
from projlink.graph import Graph, canonical_form, contract_edge, delete_edge, empty_graph, join

log = logging.getLogger("sweep")
_memo: dict[bytes, int] = {}


def lacks(g: Graph, outer: bool = False) -> bool:
    if outer:
        g = join(g, empty_graph(1))
    c = canonical_form(g)
    if c not in _memo:
        _memo[c] = euler_genus_class(g)
    return _memo[c] >= 2


def is_minimal_obstruction(g: Graph, outer: bool = False) -> bool:
    if not lacks(g, outer):
        return False
    for e in g.sorted_edges():
        if lacks(delete_edge(g, e), outer):
            return False
    for e in g.sorted_edges():
        if lacks(contract_edge(g, e), outer):
            return False
    return True


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("infile", nargs="?", default="-")
    ap.add_argument("--property", choices=("projective", "outer"), default="projective")
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stderr)
    fh = sys.stdin.buffer if args.infile == "-" else open(args.infile, "rb")
    t0 = time.time()
    seen = hits = 0
    for line in fh:
        line = line.strip()
        if not line:
            continue
        h = nx.from_graph6_bytes(line)
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        seen += 1
        if is_minimal_obstruction(g, args.property == "outer"):
            hits += 1
            print(g.n, " ".join(f"{u}-{v}" for u, v in g.sorted_edges()), flush=True)
            log.info("hit %d: %d vertices, %d edges", hits, g.n, g.m)
        if seen % 20000 == 0:
            log.info("%d graphs, %d hits, %.0fs", seen, hits, time.time() - t0)
    log.info("done: %d graphs, %d hits, %.0fs", seen, hits, time.time() - t0)


if __name__ == "__main__":
    main()

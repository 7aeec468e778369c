"""Assemble the data/ catalog from sweep output and constructed graphs.

    python3 scripts/build_catalog.py --projective /tmp/found*.txt /tmp/derived.txt \
        --outer /tmp/outer*.txt --out data

Hit files hold one graph per line as ``n u-v u-v ...`` (the format written
by exhaustive_obstructions.py and derive_obstructions.py).  Unions of two
Kuratowski graphs (and of two K4 / K2,3 graphs for the outer set) are added
here because the sweeps only cover connected or 2-connected graphs.
Every member is rechecked for minimality before anything is written.
"""

from __future__ import annotations

import argparse
import itertools
import logging
from pathlib import Path

from projlink.campaigns import fmt_cert, named_graph, petersen_family
from projlink.embedding import (all_switchings, embedding_from_cycles, enumerate_rp2_embeddings, euler_genus_class,
                                has_separating_1hom_cycle, is_nonseparating_embedding, write_emb)
from projlink.graph import (Graph, all_graphs, canonical_form, canonical_graph, complete_bipartite, complete_graph,
                            contract_edge, cycle_graph, dedupe, delete_edge, disjoint_union, empty_graph, join,
                            write_el)
from projlink.links import Star, Triangle, classify_case
from projlink.minors import has_minor, verify_certificate

log = logging.getLogger("catalog")
HEADER = "name\tfile\texpected_vertices\texpected_edges\tprovenance\tnotes"


def read_hits(paths) -> list[Graph]:
    out = []
    for p in paths:
        for line in Path(p).read_text().splitlines():
            parts = line.split()
            if parts:
                out.append(Graph.from_edges(int(parts[0]), [tuple(map(int, e.split("-"))) for e in parts[1:]]))
    return out


def one_point_union(a: Graph, b: Graph) -> Graph:
    """Glue vertex 0 of b onto vertex 0 of a."""
    shift = [0] + list(range(a.n, a.n + b.n - 1))
    return Graph.from_edges(a.n + b.n - 1, list(a.edges) + [(min(shift[u], shift[v]), max(shift[u], shift[v]))
                                                             for u, v in b.edges])


def one_point_unions(a: Graph, b: Graph) -> list[Graph]:
    out = []
    for i in range(a.n):
        for j in range(b.n):
            pa = [i] + [x for x in range(a.n) if x != i]
            pb = [j] + [x for x in range(b.n) if x != j]
            out.append(one_point_union(a.relabel([pa.index(x) for x in range(a.n)], a.n),
                                       b.relabel([pb.index(x) for x in range(b.n)], b.n)))
    return dedupe(out)


def unions(bases: list[Graph]) -> list[Graph]:
    out = []
    for a, b in itertools.combinations_with_replacement(bases, 2):
        out.append(disjoint_union(a, b))
        out += one_point_unions(a, b)
    return out


def lacks_pp(g: Graph) -> bool:
    return euler_genus_class(g) >= 2


def lacks_outer(g: Graph) -> bool:
    return euler_genus_class(join(g, empty_graph(1))) >= 2


def minimal(g: Graph, lacks) -> bool:
    if not lacks(g):
        return False
    minors = [delete_edge(g, e) for e in g.edges] + [contract_edge(g, e) for e in g.edges]
    return not any(lacks(h) for h in minors)


def strip(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.degree(v)]
    return g.induced(keep)


def collect(graphs, lacks, label) -> list[Graph]:
    seen = {}
    for g in graphs:
        g = canonical_graph(strip(g))
        c = canonical_form(g)
        if c in seen:
            continue
        if not minimal(g, lacks):
            log.info("%s: dropping non-minimal candidate with %d vertices, %d edges", label, g.n, g.m)
            continue
        seen[c] = g
    return sorted(seen.values(), key=lambda g: (g.n, g.m, canonical_form(g)))


def write_set(members, directory: Path, prefix: str, comment: str, provenance: str) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    rows = [HEADER]
    for i, g in enumerate(members, 1):
        name = f"{prefix}{i:02d}"
        write_el(g, directory / f"{name}.el", comment=f"{name}: {comment}")
        rows.append(f"{name}\t{name}.el\t{g.n}\t{g.m}\t{provenance}\t")
    (directory / "manifest.tsv").write_text("\n".join(rows) + "\n")


def outer_certificates(members, directory: Path) -> None:
    rows = ["name\tpattern\tbranch_sets"]
    for i, g in enumerate(members, 1):
        host = join(g, empty_graph(2))
        for pname in ("K44-e", "G1", "G2"):
            cert = has_minor(host, named_graph(pname), budget=None)
            if cert is not None:
                assert verify_certificate(host, named_graph(pname), cert)
                rows.append(f"op{i:02d}\t{pname}\t{fmt_cert(cert)}")
                break
        else:
            log.warning("op%02d: no certificate for any pattern", i)
    (directory / "certificates.tsv").write_text("\n".join(rows) + "\n")


# -- drawings ------------------------------------------------------------------------------


def corpus(max_n):
    for n in range(1, max_n + 1):
        for g in dedupe(all_graphs(n)):
            if g.is_connected():
                yield from enumerate_rp2_embeddings(g)


def first_drawing(pred, max_n=6):
    for emb in corpus(max_n):
        for d in all_switchings(emb):
            if pred(d):
                return d
    raise LookupError("no drawing matches")


def drawings() -> list[tuple[str, object, str]]:
    out = []
    for g in petersen_family():
        emb = next(enumerate_rp2_embeddings(g), None)
        if emb is None:
            continue  # K44-e does not embed
        out.append((f"family_{g.name}", emb, "projective-plane drawing of a Petersen family member"))
    c6 = next(enumerate_rp2_embeddings(cycle_graph(6), max_genus=0))
    out.append(("c6_outerplanar", c6, "all-positive drawing of a 6-cycle"))
    sep = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 0), (4, 2), (5, 1), (5, 3)])
    out.append(("separating_4cycle", embedding_from_cycles(sep, {0: [1, 4, 3], 1: [2, 0, 5], 2: [3, 4, 1],
                                                                 3: [0, 2, 5], 4: [0, 2], 5: [1, 3]}),
                "planar drawing whose 4-cycle has a vertex on each side"))
    out.append(("case1_star", first_drawing(
        lambda d: isinstance(classify_case(d), Star) and len(d.negative) >= 2 and d.graph.n >= 5
        and is_nonseparating_embedding(d)), "star drawing: every negative edge meets one vertex"))
    out.append(("case2_triangle", first_drawing(
        lambda d: isinstance(classify_case(d), Triangle) and d.graph.n >= 5),
        "triangle drawing: three pairwise meeting negative edges"))
    out.append(("separating_1hom", first_drawing(
        lambda d: d.euler_characteristic == 1 and is_nonseparating_embedding(d) and has_separating_1hom_cycle(d)),
        "nonseparating drawing with a one-sided cycle that has vertices on both sides"))
    k6 = next(enumerate_rp2_embeddings(complete_graph(6)))
    out.append(("neither_k6", k6, "K6 in the projective plane: two disjoint negative edges"))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--projective", nargs="*", default=[])
    ap.add_argument("--outer", nargs="*", default=[])
    ap.add_argument("--out", type=Path, default=Path("data"))
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    out = args.out
    out.mkdir(parents=True, exist_ok=True)

    if args.projective:
        kur = [complete_graph(5), complete_bipartite(3, 3)]
        pp = collect(read_hits(args.projective) + unions(kur), lacks_pp, "projective")
        log.info("projective obstructions: %d", len(pp))
        write_set(pp, out / "projective_obstructions", "pp",
                  "minor-minimal, does not embed in the projective plane",
                  "computed: exhaustive geng sweep of 2-connected min-degree-3 graphs plus Kuratowski unions; "
                  "minimality checked by embedding search")
    if args.outer:
        small = [complete_graph(4), complete_bipartite(2, 3)]
        op = collect(read_hits(args.outer) + [disjoint_union(a, b) for a, b in
                                              itertools.combinations_with_replacement(small, 2)],
                     lacks_outer, "outer")
        log.info("outer obstructions: %d", len(op))
        write_set(op, out / "outer_projective_obstructions", "op",
                  "minor-minimal, no projective drawing with all vertices on one face",
                  "computed: exhaustive geng sweep of connected graphs plus disjoint unions; "
                  "G outer-projective-planar iff G+K1 projective planar")
        outer_certificates(op, out / "outer_projective_obstructions")

    rows = [HEADER]
    c11 = disjoint_union(complete_graph(5), complete_bipartite(3, 3))
    write_el(c11, out / "c11.el", comment="C11: K5 and K3,3 as two components; vertex 5 is the Y centre")
    rows.append(f"C11\tc11.el\t{c11.n}\t{c11.m}\ttranscribed: two components K5 and K3,3\tmarked=5")
    (out / "drawings").mkdir(exist_ok=True)
    for name, emb, what in drawings():
        write_emb(emb, out / "drawings" / f"{name}.emb", comment=what)
        rows.append(f"{name}\tdrawings/{name}.emb\t{emb.graph.n}\t{emb.graph.m}\tconstructed: {what}\t")
    (out / "manifest.tsv").write_text("\n".join(rows) + "\n")
    log.info("wrote %s", out)


if __name__ == "__main__":
    main()

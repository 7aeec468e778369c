"""Acceptance campaigns, one test per criterion.

Each test prints a single ``criterion N PASS|FAIL ...`` line (visible with
``-s``); the conftest hook repeats the verdicts in the terminal summary.
The slow ones (16-edge search, Y-Delta surgery over 7 vertices) take a few
minutes each.
"""

import random
import time

import pytest

from projlink.campaigns import (DELTAY_EXPECTED, cmd_search_16, cmd_verify_archdeacon, cmd_verify_c11,
                                cmd_verify_deltay_table, cmd_verify_petersen_closure, petersen_family)
from projlink.catalog import Catalog
from projlink.embedding import (all_switchings, cycle_homology, enumerate_rp2_embeddings, euler_genus_class,
                                find_embedding, is_nonseparating_embedding, simple_cycles, switch_vertex, trace_faces,
                                y_delta_embedding)
from projlink.graph import (Graph, all_graphs, complete_bipartite, complete_graph, complete_multipartite, contract_edge,
                            cycle_graph, dedupe, delete_edge, is_isomorphic, k44_minus_e, prism_graph, wheel_graph)
from projlink.links import (Neither, Star, Triangle, case1_no_link_00, case2_no_link_00, classify_case,
                            disjoint_negative_pair, no_link_00)
from projlink.minors import has_minor, is_planar, is_projective_planar, verify_certificate
from projlink.transforms import delta_y, split_vertex, vertex_splits, y_delta

from .oracles import has_minor_oracle

SEARCH_LIMIT = 600.0


def line(num, ok, detail):
    print(f"criterion {num} {'PASS' if ok else 'FAIL'}: {detail}")


@pytest.fixture(scope="module")
def catalog():
    return Catalog.open()


@pytest.fixture(scope="module")
def obstructions(catalog):
    return catalog.projective()


def connected_graphs(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        for g in dedupe(all_graphs(n)):
            if g.is_connected():
                yield g


def test_criterion_01_petersen_closure(catalog, obstructions):
    rep = cmd_verify_petersen_closure(catalog)
    fam = petersen_family()
    k44 = [g for g in fam if (g.n, g.m) == (8, 15) and g.is_bipartite()]
    pp = [is_projective_planar(g, obstructions) for g in fam]
    ok = rep.verdict == "PASS" and len(fam) == 7 and len(k44) == 1 and all(pp)
    failing = [g.name for g, p in zip(fam, pp) if not p]
    line(1, ok, f"{rep.summary}; not projective planar: {', '.join(failing) or 'none'}")
    assert len(fam) == 7
    assert len(k44) == 1 and is_isomorphic(k44[0], k44_minus_e())
    assert not failing, f"not projective planar: {failing}"
    # the obstruction answer agrees with the embedding search
    assert all(euler_genus_class(g) <= 1 for g in fam)
    assert rep.verdict == "PASS" and rep.digest == catalog.digest()


def test_criterion_02_deltay_table():
    rep = cmd_verify_deltay_table()
    table = {(r[0], r[1]): r[5] == "present" for r in rep.rows}
    ok = rep.verdict == "PASS" and table == DELTAY_EXPECTED
    line(2, ok, ", ".join(f"{c}/{t}:{'present' if v else 'absent'}" for (c, t), v in sorted(table.items())))
    assert set(table) == set(DELTAY_EXPECTED)
    assert table == DELTAY_EXPECTED
    assert rep.verdict == "PASS"


def test_criterion_03_sixteen_edge_search(catalog):
    t = time.time()
    rep = cmd_search_16(catalog)
    elapsed = time.time() - t
    buckets = [r[4] for r in rep.rows]
    ok = rep.verdict == "PASS" and "exception" not in buckets and elapsed <= SEARCH_LIMIT
    line(3, ok, f"{rep.summary} in {elapsed:.0f}s")
    assert rep.rows and all(b in ("projective-planar", "k44e-minor") for b in buckets)
    assert elapsed <= SEARCH_LIMIT
    assert rep.verdict == "PASS"


def test_criterion_04_c11(catalog, obstructions):
    rep = cmd_verify_c11(catalog)
    g = catalog.graph("C11")
    entry = catalog.entry("C11")
    ok = rep.verdict == "PASS" and (g.n, g.m) == (entry.expected_vertices, entry.expected_edges)
    line(4, ok, f"{g.n} vertices, {g.m} edges; " + "; ".join(f"{r[0]} projective planar={r[3]}" for r in rep.rows))
    assert (g.n, g.m) == (entry.expected_vertices, entry.expected_edges)
    assert [r[3] for r in rep.rows] == [False, True]
    # the embedding search gives the same two answers
    v = int(catalog.notes["C11"]["marked"])
    assert euler_genus_class(g) >= 2 and euler_genus_class(y_delta(g, v)) <= 1
    assert rep.verdict == "PASS"


def test_criterion_05_identifications():
    k331 = complete_multipartite(3, 3, 1)
    hub = next(v for v in range(k331.n) if k331.degree(v) == 6)
    alternating = [s for s in vertex_splits(k331, hub)
                   if is_isomorphic(split_vertex(k331, s), complete_bipartite(4, 4))]
    dy = delta_y(complete_graph(4), (0, 1, 2))
    ok = bool(alternating) and is_isomorphic(dy, complete_bipartite(2, 3))
    line(5, ok, f"{len(alternating)} splits of the K331 hub give K44; delta_y(K4) = K23: "
                f"{is_isomorphic(dy, complete_bipartite(2, 3))}")
    assert alternating
    # the split sends one whole part of size three to the new vertex
    for s in alternating:
        g = split_vertex(k331, s)
        assert g.n == 8 and g.m == 16 and g.is_bipartite()
    assert is_isomorphic(dy, complete_bipartite(2, 3))


def _oracle_corpus(size=500, seed=20240601):
    fixed = [complete_graph(n) for n in range(4, 9)]
    fixed += [complete_bipartite(a, b) for a in range(1, 5) for b in range(a, 9 - a)]
    fixed += [wheel_graph(k) for k in range(3, 8)] + [cycle_graph(k) for k in range(3, 9)]
    fixed += [prism_graph(p) for p in ((1, 1, 1), (1, 1, 2))] + [k44_minus_e(), complete_multipartite(2, 2, 2),
                                                                 complete_multipartite(3, 3, 1),
                                                                 complete_multipartite(2, 2, 2, 1)]
    fixed += [g for g in petersen_family() if g.n <= 8]
    rng = random.Random(seed)
    out = list(fixed)
    while len(out) < size:
        n = rng.randint(5, 8)
        p = rng.uniform(0.3, 0.95)
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


def test_criterion_06_oracle_equivalence(obstructions):
    corpus = _oracle_corpus()
    patterns = [complete_graph(5), complete_bipartite(3, 3), k44_minus_e()]
    bad_minor, bad_embed, both_ran, queries = [], [], 0, 0
    for g in corpus:
        for h in patterns:
            cert = has_minor(g, h, budget=None)
            queries += 1
            if cert is not None and not verify_certificate(g, h, cert):
                bad_minor.append((g.edges, h.name, "certificate"))
            if (cert is not None) != has_minor_oracle(g, h):
                bad_minor.append((g.edges, h.name))
        if g.is_connected():
            both_ran += 1
            if (find_embedding(g) is not None) != is_projective_planar(g, obstructions):
                bad_embed.append(g.edges)
    ok = not bad_minor and not bad_embed
    line(6, ok, f"{len(corpus)} hosts, {queries} minor queries, {len(bad_minor)} disagreements; "
                f"{both_ran} embedding checks, {len(bad_embed)} disagreements")
    assert len(corpus) == 500 and max(g.n for g in corpus) <= 8
    assert not bad_minor, bad_minor[:3]
    assert not bad_embed, bad_embed[:3]


def test_criterion_07_embedding_invariants():
    embeddings = checks = 0
    bad = []
    for g in connected_graphs(6):
        cycles = list(simple_cycles(g))
        for emb in enumerate_rp2_embeddings(g):
            embeddings += 1
            emb.validate()
            faces = trace_faces(emb)
            if sum(len(w) for w in emb.faces) != 2 * g.m or len(faces) != emb.face_count:
                bad.append(("faces", emb))
            chi = g.n - g.m + len(faces)
            homs = [cycle_homology(emb, c) for c in cycles]
            # Euler value 2 exactly when the signature is switching-trivial
            if chi not in (1, 2) or (chi == 2) != (not any(homs)):
                bad.append(("euler", emb))
            for v in range(g.n):
                sw = switch_vertex(emb, v)
                checks += len(cycles)
                if [cycle_homology(sw, c) for c in cycles] != homs:
                    bad.append(("switch", emb, v))
                if sw.face_count != emb.face_count:
                    bad.append(("switch-faces", emb, v))
    line(7, not bad, f"{embeddings} embeddings, {checks} switched cycle checks, {len(bad)} violations")
    assert embeddings > 1000
    assert not bad, bad[:3]


def test_criterion_08_link_theorems():
    counts = {"star": 0, "triangle": 0, "neither": 0}
    bad = []
    planar = {}
    for g in connected_graphs(6):
        for emb in enumerate_rp2_embeddings(g):
            ok00 = no_link_00(emb)[0]
            for d in all_switchings(emb):
                case = classify_case(d)
                if (disjoint_negative_pair(d) is None) == isinstance(case, Neither):
                    bad.append(("sharing", d))
                if isinstance(case, Star):
                    counts["star"] += 1
                    if case1_no_link_00(d) != ok00:
                        bad.append(("case1", d))
                elif isinstance(case, Triangle):
                    counts["triangle"] += 1
                    if case2_no_link_00(d) != ok00:
                        bad.append(("case2", d))
                else:
                    counts["neither"] += 1
                if not isinstance(case, Neither):
                    if g not in planar:
                        planar[g] = is_planar(g)
                    if not planar[g]:
                        bad.append(("planarity", d))
    total = sum(counts.values())
    line(8, not bad, f"{total} signed drawings ({counts}), {len(bad)} counterexamples")
    assert counts["star"] and counts["triangle"] and counts["neither"]
    assert not bad, [(k, d.graph.edges, d.negative) for k, d in bad[:3]]


def test_criterion_09_y_delta_surgery():
    checked = 0
    bad = []
    for g in connected_graphs(7, min_n=4):
        cubic = [v for v in range(g.n) if g.degree(v) == 3]
        if not cubic:
            continue
        for emb in enumerate_rp2_embeddings(g):
            if not is_nonseparating_embedding(emb):
                continue
            for v in cubic:
                checked += 1
                if not is_nonseparating_embedding(y_delta_embedding(emb, v)):
                    bad.append((g.edges, emb.rotation, emb.negative, v))
    line(9, not bad, f"{checked} surgeries on nonseparating embeddings, {len(bad)} counterexamples")
    assert checked > 10000
    assert not bad, bad[:3]


def test_criterion_10_outer_obstruction_certificates(catalog):
    rep = cmd_verify_archdeacon(catalog)
    if rep.verdict == "SKIP":
        print(f"criterion 10 SKIP: {rep.summary}")
        pytest.skip(rep.summary)
    # columns: graph, vertices, edges, stored_pattern, stored_verifies, k44e_found, alternate, delta_y_from, certificate
    stored = sum(r[4] is True for r in rep.rows)
    found = sum(r[8] is not None for r in rep.rows)
    alternates = [f"{r[0]}:{r[6]}" for r in rep.rows if r[6]]
    missing = [r[0] for r in rep.rows if r[4] is not True or r[8] is None]
    ok = len(rep.rows) == 32 and stored == 32 and found == 32
    line(10, ok, f"{len(rep.rows)} graphs, {stored} stored certificates verify, {found} minors found "
                 f"(K6 sums: {', '.join(alternates) or 'none'}; neither: {', '.join(missing) or 'none'})")
    assert len(rep.rows) == 32
    assert stored == 32 and found == 32, f"no certificate for {missing}"


def test_smallest_obstructions_are_minimal(obstructions):
    # spot check: every single deletion or contraction of the five smallest members embeds
    members = sorted(obstructions.graphs, key=lambda g: (g.m, g.n))[:5]
    for g in members:
        assert euler_genus_class(g) >= 2
        for e in g.edges:
            assert euler_genus_class(delete_edge(g, e)) <= 1
            assert euler_genus_class(contract_edge(g, e)) <= 1


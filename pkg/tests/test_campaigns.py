import itertools

import pytest

from projlink.campaigns import (classify_candidate, cmd_verify_archdeacon, k6_three_sum, k6_two_sum, k7_minus_two,
                                petersen_family, sixteen_candidates, triangle_type)
from projlink.catalog import Catalog
from projlink.embedding import euler_genus_class
from projlink.graph import (complete_bipartite, complete_graph, complete_multipartite, contract_edge, delete_edge,
                            disjoint_union, empty_graph, is_isomorphic, join, k44_minus_e)
from projlink.minors import has_minor, is_projective_planar
from projlink.transforms import delta_y, enumerate_edge_additions, split_vertex, vertex_splits


@pytest.fixture(scope="module")
def catalog():
    return Catalog.open()


@pytest.fixture(scope="module")
def family():
    return {g.name: g for g in petersen_family()}


def test_named_sums():
    g1, g2 = k6_two_sum(), k6_three_sum()
    assert (g1.n, g1.m) == (10, 28) and (g2.n, g2.m) == (9, 24)
    # G1 is exactly two disjoint K4 joined to two nonadjacent vertices
    assert is_isomorphic(g1, join(disjoint_union(complete_graph(4), complete_graph(4)), empty_graph(2)))


def test_deltay_triangle_types():
    g = k7_minus_two(adjacent=True)
    assert triangle_type(g, (0, 2, 3), "1") == "2"
    assert triangle_type(g, (1, 3, 4), "1") == "1b"
    assert triangle_type(g, (0, 3, 4), "1") == "1a"
    assert triangle_type(g, (3, 4, 5), "1") == "0"
    h = k7_minus_two(adjacent=False)
    assert triangle_type(h, (0, 2, 4), "2") == "2"


def test_k44_minus_e_is_the_only_family_obstruction(catalog, family):
    obs = catalog.projective()
    members = [name for name, g in family.items() if any(is_isomorphic(g, o) for o in obs)]
    assert members == ["K44-e"]


def test_edge_additions_to_p9_p10_stay_projective(catalog, family):
    obs = catalog.projective()
    for name in ("P9", "P10"):
        for g in enumerate_edge_additions(family[name]):
            assert is_projective_planar(g, obs)
            assert euler_genus_class(g) <= 1


def test_k331_alternating_split_lands_in_k44e_bucket(catalog):
    k331 = complete_multipartite(3, 3, 1)
    hub = next(v for v in range(k331.n) if k331.degree(v) == 6)
    k44 = [split_vertex(k331, s) for s in vertex_splits(k331, hub)
           if is_isomorphic(split_vertex(k331, s), complete_bipartite(4, 4))]
    bucket, witness = classify_candidate((k44[0], str(catalog.root), None))
    assert bucket == "k44e-minor" and witness.count("|") == 7


def test_sixteen_candidates_buckets_match_embedding_search(catalog):
    cands = sixteen_candidates()
    assert cands and all(c.graph.m == 16 for c in cands)
    assert len({c.code for c in cands}) == len(cands)
    for c in cands:
        bucket, _ = classify_candidate((c.graph, str(catalog.root), None))
        assert bucket in ("projective-planar", "k44e-minor"), c.source
        assert (bucket == "projective-planar") == (euler_genus_class(c.graph) <= 1), c.source


def test_projective_obstructions_form_an_antichain(catalog):
    obs = sorted(catalog.projective(), key=lambda g: (g.m, g.n))
    assert len(obs) == 35
    for a, b in itertools.combinations(obs, 2):
        if a.m <= b.m:
            assert has_minor(b, a, budget=None) is None, (a.name, b.name)


def test_outer_obstructions_are_minimal(catalog):
    obs = catalog.outer()
    assert len(obs) == 32

    def outer_pp(g):
        return euler_genus_class(join(g, empty_graph(1))) <= 1

    for g in obs:
        assert not outer_pp(g)
        for e in g.edges:
            assert outer_pp(delete_edge(g, e)) and outer_pp(contract_edge(g, e))


def test_outer_delta_y_routes_are_genuine(catalog):
    rep = cmd_verify_archdeacon(catalog)
    graphs = {g.name: g for g in catalog.outer()}
    for row in rep.rows:
        if row[7] is not None:
            src, dst = graphs[row[7]], graphs[row[0]]
            assert any(is_isomorphic(delta_y(src, t), dst) for t in src.triangles())
    assert rep.verdict == "PASS"


def test_k44_minus_e_not_in_its_own_split_family_without_minor():
    # splits of K44-e all keep K44-e as a minor: contract the new edge back
    g = k44_minus_e()
    for v in range(g.n):
        for s in vertex_splits(g, v):
            assert has_minor(split_vertex(g, s), g) is not None

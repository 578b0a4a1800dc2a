from __future__ import annotations

import random

import pytest

from girthlab import families
from girthlab.errors import InfiniteGirth, NotAnEdge, NotCubicVertex
from girthlab.girth import (
    check_partition_facts,
    cycle_vertex_order,
    distance_partition,
    distance_partition_2path,
    epsilon,
    epsilon_by_paths,
    girth,
    girth_cycles,
    girth_report,
    two_path_counts,
)
from girthlab.multigraph import MultiGraph, from_edge_list
from girthlab.schemes import truncate, unique_cubic_scheme

from oracle import naive_epsilon, naive_girth, naive_girth_cycles, naive_signatures

TRUNC_3PRISM = truncate(unique_cubic_scheme(families.prism(3))).graph


def test_girth_of_named_graphs():
    assert girth(families.petersen()) == 5
    assert girth(families.heawood()) == 6
    assert girth(families.complete(4)) == 3
    assert girth(families.complete_bipartite(3, 3)) == 4
    assert girth(families.dodecahedron()) == 5


def test_forest_girth_is_none_but_reports_reject():
    tree = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    assert girth(tree) is None
    with pytest.raises(InfiniteGirth):
        girth_report(tree)
    with pytest.raises(InfiniteGirth):
        epsilon(tree, 0)


def test_multigraph_girth_conventions():
    assert girth(from_edge_list(2, [(0, 0), (0, 1)])) == 1
    assert girth(from_edge_list(2, [(0, 1), (0, 1)])) == 2
    theta = MultiGraph(2, list(enumerate([(0, 1)] * 3)))
    assert girth(theta) == 2
    rep = girth_report(theta)
    assert rep.cycle_count == 3  # three parallel pairs
    assert rep.epsilon == {0: 2, 1: 2, 2: 2}
    loops = MultiGraph(1, [(0, (0,)), (1, (0,))])
    rep2 = girth_report(loops)
    assert rep2.girth == 1 and rep2.cycle_count == 2 and rep2.epsilon == {0: 1, 1: 1}


def test_epsilon_named_values():
    pet = families.petersen()
    assert all(epsilon(pet, e.id) == 4 for e in pet.edges)
    dod = families.dodecahedron()
    assert all(epsilon(dod, e.id) == 2 for e in dod.edges)
    hea = families.heawood()
    assert all(epsilon(hea, e.id) == 8 for e in hea.edges)  # (k-1)^d = 2^3


def test_girth_report_examples():
    assert girth_report(families.complete(4)).regular == (2, 2, 2)
    assert girth_report(families.complete_bipartite(3, 3)).regular == (4, 4, 4)
    rep = girth_report(TRUNC_3PRISM)
    assert rep.girth == 3 and rep.regular == (0, 1, 1)
    assert girth_report(families.petersen()).cycle_count == 12


def test_cycle_count_conservation():
    for g in (
        families.petersen(),
        families.heawood(),
        families.prism(6),
        families.mobius(5),
        TRUNC_3PRISM,
    ):
        rep = girth_report(g)
        assert sum(rep.epsilon.values()) == rep.girth * rep.cycle_count


def test_non_regular_graph_has_no_graph_signature():
    # triangle with a pendant vertex
    g = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    rep = girth_report(g)
    assert rep.regular is None
    assert rep.signatures[3] == (0,)
    assert rep.signatures[0] == (1, 1)


def test_oracle_equivalence_on_named_graphs():
    for g in (
        families.complete(4),
        families.petersen(),
        families.prism(5),
        families.mobius(6),
        families.heawood(),
        TRUNC_3PRISM,
    ):
        rep = girth_report(g)
        assert rep.girth == naive_girth(g)
        assert rep.epsilon == naive_epsilon(g)
        assert rep.signatures == naive_signatures(g)
        assert set(girth_cycles(g)) == naive_girth_cycles(g)


def test_oracle_equivalence_on_multigraphs():
    theta = MultiGraph(2, list(enumerate([(0, 1)] * 3)))
    assert girth_report(theta).epsilon == naive_epsilon(theta)
    loopy = MultiGraph(2, [(0, (0,)), (1, (0, 1)), (2, (0, 1))])
    assert girth_report(loopy).epsilon == naive_epsilon(loopy)


def test_epsilon_by_paths_matches_fast_counter():
    for g in (families.petersen(), families.heawood(), families.prism(7)):
        for e in g.edges:
            assert epsilon(g, e.id) == epsilon_by_paths(g, e.id)


def test_signature_is_isomorphism_invariant():
    rng = random.Random(11)
    for g in (families.petersen(), families.mobius(5), TRUNC_3PRISM):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabeled(perm)
        sig_g = girth_report(g).signatures
        sig_h = girth_report(h).signatures
        assert sorted(sig_g.values()) == sorted(sig_h.values())
        assert all(sig_h[perm[v]] == sig_g[v] for v in range(g.n))


def test_theorem1_bound_on_regular_samples():
    for g in (
        families.complete(4),
        families.petersen(),
        families.heawood(),
        families.tutte_coxeter(),
        families.cycle(9),
        families.hoffman_singleton(),
    ):
        k = g.is_regular()
        rep = girth_report(g)
        bound = (k - 1) ** (rep.girth // 2)
        assert all(c <= bound for c in rep.epsilon.values())


def test_two_path_counts_examples():
    k4 = families.complete(4)
    for v in range(4):
        t = two_path_counts(k4, v)
        assert (t.x, t.y, t.z) == (1, 1, 1)
    pet = families.petersen()
    for v in range(10):
        t = two_path_counts(pet, v)
        assert (t.x, t.y, t.z) == (2, 2, 2)
    for v in range(TRUNC_3PRISM.n):
        t = two_path_counts(TRUNC_3PRISM, v)
        assert sorted((t.x, t.y, t.z)) == [0, 0, 1]


def test_two_path_counts_solve_their_linear_system():
    for g in (families.petersen(), families.mobius(4), families.prism(6), TRUNC_3PRISM):
        rep = girth_report(g)
        for v in range(g.n):
            t = two_path_counts(g, v)
            a, b, c = (rep.epsilon[e] for e in t.edges)
            assert a == t.x + t.z
            assert b == t.x + t.y
            assert c == t.y + t.z
            assert (t.x, t.y, t.z) == (
                (a + b - c) // 2,
                (-a + b + c) // 2,
                (a - b + c) // 2,
            )


def test_two_path_counts_rejects_non_cubic_vertices():
    with pytest.raises(NotCubicVertex):
        two_path_counts(families.cycle(5), 0)
    with pytest.raises(NotCubicVertex):
        two_path_counts(from_edge_list(2, [(0, 0), (0, 1)]), 0)


def test_distance_partition_petersen():
    pet = families.petersen()
    part = distance_partition(pet, 0, 1)
    assert part.radius == 2
    assert len(part.cell(1, 2)) == 2
    assert len(part.cell(2, 1)) == 2
    assert len(part.cell(2, 2)) == 4
    assert epsilon(pet, next(e.id for e in pet.edges if set(e.ends) == {0, 1})) == 4
    for (i, j), cell in part.cells.items():
        if abs(i - j) >= 2:
            assert not cell


def test_distance_partition_k33_cross_edges():
    g = families.complete_bipartite(3, 3)
    part = distance_partition(g, 0, 3)
    upper, lower = part.cell(1, 2), part.cell(2, 1)
    cross = [
        e
        for e in g.edges
        if (e.ends[0] in upper and e.ends[1] in lower)
        or (e.ends[1] in upper and e.ends[0] in lower)
    ]
    assert len(cross) == 4  # equals epsilon via fact (5)


def test_distance_partition_requires_an_edge():
    with pytest.raises(NotAnEdge):
        distance_partition(families.petersen(), 0, 2)


def test_distance_partition_2path():
    pet = families.petersen()
    part = distance_partition_2path(pet, 4, 0, 1)
    assert part.sources == (4, 0, 1)
    assert part.radius == 2
    with pytest.raises(NotAnEdge):
        distance_partition_2path(pet, 0, 2, 4)


def test_partition_facts_even_girth():
    hea = families.heawood()
    u, v = hea.edges[0].ends
    results = {r.fact: r for r in check_partition_facts(hea, u, v)}
    for fact in (1, 2, 3, 4, 5):
        assert results[fact].applicable and results[fact].holds, results[fact]
    assert not results[6].applicable


def test_partition_facts_odd_girth():
    pet = families.petersen()
    results = {r.fact: r for r in check_partition_facts(pet, 0, 1)}
    for fact in (1, 2, 3, 4, 6):
        assert results[fact].applicable and results[fact].holds, results[fact]
    assert not results[5].applicable


def test_partition_facts_cycle_degenerate():
    c6 = families.cycle(6)
    results = {r.fact: r for r in check_partition_facts(c6, 0, 1)}
    for fact in (1, 2, 3, 4, 5):
        assert results[fact].holds or not results[fact].applicable


def test_cycle_vertex_order_orientation():
    k4 = families.complete(4)
    cyc = next(c for c in girth_cycles(k4) if 0 in cycle_vertex_order(k4, c))
    order = cycle_vertex_order(k4, cyc)
    assert order[0] == min(order)
    assert order[1] == min(order[1], order[-1])


def test_report_json_shape():
    doc = girth_report(families.complete(4)).to_json()
    assert doc["girth"] == 3 and doc["cycles"] == 4
    assert doc["regular"] == [2, 2, 2]
    assert set(doc["epsilon"]) == {str(e) for e in range(6)}
    assert doc["signatures"]["0"] == [2, 2, 2]

from __future__ import annotations

import pytest

from girthlab import families
from girthlab.errors import Disconnected, InfiniteGirth, PreconditionViolation
from girthlab.girth import girth_report
from girthlab.isomorphism import are_isomorphic
from girthlab.laws import (
    DODECAHEDRON,
    K4,
    K33,
    OUTSIDE,
    PETERSEN,
    PRISM_OR_MOBIUS,
    Q3,
    TRUNC011,
    canonical_graph,
    census,
    check_all_laws,
    classify_g5,
)
from girthlab.multigraph import from_edge_list
from girthlab.schemes import truncate, unique_cubic_scheme


def law(results, law_id):
    return next(r for r in results if r.law_id == law_id)


def test_petersen_laws():
    results = check_all_laws(families.petersen())
    assert law(results, "thm1").holds  # 4 <= 2^2
    thm3 = law(results, "thm3")
    assert thm3.applicable and thm3.holds
    assert law(results, "cor3.3").holds
    assert not law(results, "thm2").applicable  # odd girth
    main = law(results, "thm-main")
    assert main.applicable and main.holds
    assert main.witness["case"] == PETERSEN


def test_heawood_thm2():
    results = check_all_laws(families.heawood())
    thm2 = law(results, "thm2")
    assert thm2.applicable and thm2.holds
    assert thm2.witness == {"model": "heawood"}
    assert not law(results, "thm3").applicable


def test_tutte_coxeter_thm2():
    results = check_all_laws(families.tutte_coxeter())
    thm2 = law(results, "thm2")
    assert thm2.applicable and thm2.holds


def test_k33_thm2_and_main():
    results = check_all_laws(families.complete_bipartite(3, 3))
    assert law(results, "thm2").holds
    assert law(results, "thm-main").witness["case"] == K33


def test_lemma_suite_on_named_graphs():
    for g in (
        families.complete(4),
        families.petersen(),
        families.prism(3),
        families.prism(7),
        families.mobius(5),
        families.dodecahedron(),
        truncate(unique_cubic_scheme(families.complete(4))).graph,
    ):
        for r in check_all_laws(g):
            assert not r.violated, (r.law_id, r.witness)


def test_decomposition_laws_applicable_and_hold():
    tr = truncate(unique_cubic_scheme(families.prism(3))).graph
    results = check_all_laws(tr)
    assert law(results, "thm3.6").applicable and law(results, "thm3.6").holds
    results = check_all_laws(families.cube_q3())
    assert law(results, "thm3.9").applicable and law(results, "thm3.9").holds
    results = check_all_laws(families.mobius(6))
    assert law(results, "thm3.11").applicable and law(results, "thm3.11").holds


def test_laws_reject_disconnected_and_forests():
    with pytest.raises(Disconnected):
        check_all_laws(from_edge_list(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    with pytest.raises(InfiniteGirth):
        check_all_laws(from_edge_list(3, [(0, 1), (1, 2)]))


def test_non_girth_regular_graph_has_no_applicable_cubic_laws():
    # cubic, connected, but not girth-regular
    g = from_edge_list(
        8,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 5), (4, 6), (4, 7),
         (5, 6), (5, 7), (2, 6), (3, 7)],
    )
    assert g.is_regular() == 3
    rep = girth_report(g)
    assert rep.regular is None
    results = check_all_laws(g)
    assert law(results, "thm1").applicable  # regular, so the bound applies
    assert law(results, "thm1").holds
    for law_id in ("lem3.1", "lem3.2", "cor3.3", "lem3.4", "thm-main"):
        assert not law(results, law_id).applicable


# --- classify_g5 ---

def test_classification_named_cases():
    assert classify_g5(families.complete(4)).case == K4
    assert classify_g5(families.complete_bipartite(3, 3)).case == K33
    assert classify_g5(families.cube_q3()).case == Q3
    assert classify_g5(families.petersen()).case == PETERSEN
    assert classify_g5(families.dodecahedron()).case == DODECAHEDRON


def test_classification_prisms_and_mobius():
    c = classify_g5(families.prism(7))
    assert c.case == PRISM_OR_MOBIUS and c.detail == {"family": "prism", "n": 7}
    c = classify_g5(families.mobius(6))
    assert c.case == PRISM_OR_MOBIUS and c.detail == {"family": "mobius", "n": 6}


def test_classification_trunc011_witness():
    tr = truncate(unique_cubic_scheme(families.prism(3))).graph
    c = classify_g5(tr)
    assert c.case == TRUNC011
    assert c.detail["girth"] == 3
    lam, scheme = c.witness
    assert lam.is_regular() == 3
    model = canonical_graph(c)
    assert are_isomorphic(model, tr)[0]


def test_classification_soundness_via_canonical_graph():
    for g in (
        families.complete(4),
        families.cube_q3(),
        families.prism(9),
        families.mobius(5),
        families.petersen(),
        families.dodecahedron(),
        families.prism(3),
    ):
        c = classify_g5(g)
        assert c.case != OUTSIDE
        assert are_isomorphic(canonical_graph(c), g)[0]


def test_classification_preconditions():
    with pytest.raises(PreconditionViolation):
        classify_g5(families.heawood())  # girth 6
    with pytest.raises(PreconditionViolation):
        classify_g5(families.cycle(5))  # not cubic
    g = from_edge_list(
        8,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (4, 5), (4, 6), (4, 7),
         (5, 6), (5, 7), (2, 6), (3, 7)],
    )
    with pytest.raises(PreconditionViolation):
        classify_g5(g)  # not girth-regular


# --- census ---

def test_census_three_buckets():
    items = [
        ("k4", families.complete(4)),
        ("petersen", families.petersen()),
        ("q3", families.cube_q3()),
    ]
    result = census(items)
    assert result.total == 3
    keys = {(b.girth, b.signature) for b in result.buckets.values()}
    assert keys == {(3, (2, 2, 2)), (5, (4, 4, 4)), (4, (2, 2, 2))}
    assert not result.violations
    assert not result.errors


def test_census_empty():
    result = census([])
    assert result.total == 0 and not result.buckets
    assert "graphs: 0" in result.to_text()


def test_census_collects_parse_errors():
    items = [("ok", families.complete(4)), ("bad", ValueError("nope"))]
    result = census(items)
    assert result.total == 1
    assert result.errors == [("bad", "nope")]


def test_census_text_and_json_shapes():
    result = census([("k4", families.complete(4))])
    text = result.to_text()
    assert "girth" in text and "(2,2,2)" in text
    doc = result.to_json()
    assert doc["total"] == 1
    assert doc["buckets"][0]["signature"] == [2, 2, 2]
    assert doc["buckets"][0]["examples"] == ["k4"]

from __future__ import annotations

import json
import random

import pytest

from girthlab import families
from girthlab.codec import (
    parse_graph6,
    read_multigraph_json,
    read_multigraph_json_full,
    write_graph6,
    write_multigraph_json,
    write_sparse6,
)
from girthlab.errors import (
    InvalidScheme,
    MalformedEncoding,
    NotSimple,
    SchemaViolation,
    VertexCountOverflow,
)
from girthlab.isomorphism import are_isomorphic
from girthlab.multigraph import MultiGraph, from_edge_list
from girthlab.schemes import unique_cubic_scheme

from oracle import graph6_bits_reader


def test_graph6_against_independent_bit_reader():
    n, edges = graph6_bits_reader("D?{")
    g = parse_graph6("D?{")
    assert g.n == n == 5
    assert sorted(e.ends for e in g.edges) == sorted(
        (min(u, v), max(u, v)) for u, v in edges
    )


def test_graph6_empty_one_vertex():
    g = parse_graph6("@")
    assert g.n == 1 and g.edge_count == 0


def test_triangle_encodes_to_Bw():
    # hand-encoded: n=3, bits x01 x02 x12 = 111, padded 111000 -> 56+63='w'
    tri = from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    assert write_graph6(tri) == "Bw"
    n, edges = graph6_bits_reader("Bw")
    assert n == 3 and len(edges) == 3


def test_k4_roundtrip_is_isomorphic():
    k4 = families.complete(4)
    again = parse_graph6(write_graph6(k4))
    assert are_isomorphic(k4, again)[0]


def test_write_graph6_rejects_non_simple():
    with pytest.raises(NotSimple):
        write_graph6(from_edge_list(2, [(0, 0)]))
    with pytest.raises(NotSimple):
        write_graph6(from_edge_list(2, [(0, 1), (0, 1)]))


def test_graph6_headers_and_errors():
    assert parse_graph6(">>graph6<<D?{").n == 5
    with pytest.raises(MalformedEncoding):
        parse_graph6("")
    with pytest.raises(MalformedEncoding):
        parse_graph6("D?")  # truncated body
    with pytest.raises(MalformedEncoding):
        parse_graph6("D?{{")  # overlong body
    with pytest.raises(MalformedEncoding):
        parse_graph6(";Fa@x^")  # incremental sparse6 unsupported
    with pytest.raises(VertexCountOverflow):
        parse_graph6(write_graph6(families.cycle(100)), cap=50)


def test_long_form_vertex_count():
    n = 100
    line = write_graph6(families.cycle(n))
    g = parse_graph6(line)
    assert g.n == n
    assert write_graph6(g) == line


def test_sparse6_known_line():
    # n=7 with edges 01, 02, 12, 56: the format description's worked example
    g = MultiGraph(7, list(enumerate([(0, 1), (0, 2), (1, 2), (5, 6)])))
    assert write_sparse6(g) == ":Fa@x^"
    h = parse_graph6(":Fa@x^")
    assert h.n == 7
    assert sorted(e.ends for e in h.edges) == [(0, 1), (0, 2), (1, 2), (5, 6)]


def test_sparse6_carries_loops_and_parallels():
    g = MultiGraph(3, list(enumerate([(0, 0), (0, 1), (0, 1), (1, 2)])))
    h = parse_graph6(write_sparse6(g))
    assert h.n == 3
    assert sorted(e.ends for e in h.edges) == [(0,), (0, 1), (0, 1), (1, 2)]


def test_sparse6_power_of_two_padding_clash():
    # triangle inside n=4: final position counter lands on n-2
    g = from_edge_list(4, [(0, 1), (0, 2), (1, 2)])
    line = write_sparse6(g)
    h = parse_graph6(line)
    assert sorted(e.ends for e in h.edges) == [(0, 1), (0, 2), (1, 2)]
    # single loop at 0 inside n=2
    g2 = MultiGraph(2, [(0, (0, 0))])
    h2 = parse_graph6(write_sparse6(g2))
    assert [e.ends for e in h2.edges] == [(0,)]


def test_sparse6_random_multigraph_roundtrips():
    rng = random.Random(20240817)
    for _ in range(200):
        n = rng.randint(1, 12)
        m = rng.randint(0, 20)
        pairs = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n)
            pairs.append((min(u, v), max(u, v)))
        g = from_edge_list(n, pairs)
        h = parse_graph6(write_sparse6(g))
        assert h.n == g.n
        assert sorted(e.ends for e in h.edges) == sorted(e.ends for e in g.edges)


def test_graph6_random_simple_roundtrips():
    rng = random.Random(99)
    for _ in range(100):
        n = rng.randint(1, 13)
        pairs = {
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < 0.4
        }
        g = from_edge_list(n, sorted(pairs))
        line = write_graph6(g)
        h = parse_graph6(line)
        assert write_graph6(h) == line
        assert sorted(e.ends for e in h.edges) == sorted(e.ends for e in g.edges)


def test_corpus_lines_roundtrip_byte_exact(cubic14):
    from girthlab.corpus import corpus_lines

    for line in corpus_lines():
        assert write_graph6(parse_graph6(line)) == line


# --- multigraph JSON ---

def test_json_theta_graph_roundtrip():
    # two vertices, three parallel edges
    g = MultiGraph(2, list(enumerate([(0, 1)] * 3)))
    doc = write_multigraph_json(g)
    back = read_multigraph_json(doc)
    assert back == g


def test_json_empty_and_loop():
    assert read_multigraph_json({"vertices": 0, "edges": []}).n == 0
    g = read_multigraph_json({"vertices": 1, "edges": [{"id": 0, "ends": [0]}]})
    assert g.edge(0).is_loop


def test_json_scheme_roundtrip():
    k4 = families.complete(4)
    scheme = unique_cubic_scheme(k4)
    doc = write_multigraph_json(k4, scheme)
    g, scheme2 = read_multigraph_json_full(json.dumps(doc))
    assert g == k4
    assert scheme2 == scheme


def test_json_schema_violations():
    with pytest.raises(SchemaViolation):
        read_multigraph_json({"edges": []})
    with pytest.raises(SchemaViolation):
        read_multigraph_json({"vertices": 1, "edges": [{"id": 0}]})
    with pytest.raises(SchemaViolation):
        read_multigraph_json({"vertices": 1, "edges": [{"id": 0, "ends": []}]})
    with pytest.raises(SchemaViolation):
        read_multigraph_json("not json at all {")


def test_json_dangling_endpoint():
    from girthlab.errors import DanglingEndpoint

    with pytest.raises(DanglingEndpoint):
        read_multigraph_json({"vertices": 1, "edges": [{"id": 0, "ends": [0, 3]}]})


def test_json_invalid_scheme_rejected():
    k4 = families.complete(4)
    doc = write_multigraph_json(k4, unique_cubic_scheme(k4))
    doc["scheme"][0] = doc["scheme"][0][:2]  # rotation no longer covers out(v)
    with pytest.raises(InvalidScheme):
        read_multigraph_json_full(doc)

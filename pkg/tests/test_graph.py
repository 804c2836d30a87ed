import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cavpg.graph import (
    Graph,
    GraphFormatError,
    complete_graph,
    contract,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_simplicial,
    parse_graph,
    parse_json,
    parse_text,
    path_graph,
    relabel,
    to_json,
    to_text,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_basic_accessors():
    g = cycle_graph(5)
    assert g.n == 5 and g.m == 5
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert g.neighbours(0) == {1, 4}
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])


def test_components_sorted_by_smallest_vertex():
    g = Graph.from_edges(6, [(4, 5), (0, 3), (1, 2)])
    assert g.components() == [[0, 3], [1, 2], [4, 5]]


def test_contract_example():
    h, index = contract(path_graph(3), 0, 1)
    assert h.n == 2 and h.edges() == [(0, 1)]
    assert index == {0: 0, 2: 1}


def test_simplicial():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    assert is_simplicial(g, 0) and is_simplicial(g, 3) and not is_simplicial(g, 2)


def test_text_format_example():
    g = parse_text("4 4\n0 1\n1 2\n2 3\n0 3\n")
    assert g == cycle_graph(4)


@pytest.mark.parametrize(
    "text",
    ["", "3", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 1\n1 0\n", "3 2\n0 1\n", "x y"],
)
def test_text_format_errors(text):
    with pytest.raises(GraphFormatError):
        parse_text(text)


def test_json_format_errors():
    for bad in ['{"n": 2}', '{"n": -1, "edges": []}', '{"n": 2, "edges": [[0, 1, 2]]}', "{oops"]:
        with pytest.raises(GraphFormatError):
            parse_json(bad)


@given(graphs())
def test_round_trips(g):
    assert parse_graph(to_text(g)) == g
    assert parse_graph(json.dumps(to_json(g))) == g


@given(graphs(), st.data())
def test_induced_subgraph_keeps_adjacency(g, data):
    keep = data.draw(st.sets(st.sampled_from(range(g.n))) if g.n else st.just(set()))
    h, index = induced_subgraph(g, keep)
    for u in keep:
        for v in keep:
            if u != v:
                assert h.has_edge(index[u], index[v]) == g.has_edge(u, v)


@given(graphs(), st.randoms())
def test_relabel_is_isomorphism(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert h.m == g.m
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_disjoint_union_and_complete():
    g = disjoint_union(complete_graph(3), path_graph(2))
    assert g.n == 5 and g.m == 4 and len(g.components()) == 2

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavpg.decompose import (
    HoleStructure,
    StructureError,
    classify_types,
    decompose_around_hole,
    prune_simplicial,
    replay,
    structure_from_counts,
    structure_graph,
)
from cavpg.families import Certificate, Family, check_certificate, hole_graph, make_f3
from cavpg.graph import Graph, cycle_graph, path_graph
from helpers import add_simplicial
from test_graph import graphs


def test_prune_p3_empties():
    core, back, log = prune_simplicial(path_graph(3))
    assert core.n == 0 and len(log) == 3


def test_prune_c4_pendant():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])
    core, back, log = prune_simplicial(g)
    assert core.n == 4 and [r.vertex for r in log] == [4]


def test_prune_keeps_f3():
    core, _, log = prune_simplicial(make_f3(5))
    assert core.n == 20 and log == []


@given(graphs(max_n=10))
def test_replay_rebuilds(g):
    core, back, log = prune_simplicial(g)
    assert replay(core, back, log, g.n) == g


@given(graphs(max_n=10))
def test_core_has_no_prunable_vertex(g):
    core, _, _ = prune_simplicial(g)
    for v in core.vertices:
        nb = sorted(core.adj[v])
        assert len(nb) > 2 or (len(nb) == 2 and not core.has_edge(*nb))


def test_types_table():
    U = [[(9, 9, 9)], [], [(9, 9, 9)] * 2, [], [(9, 9, 9)]]
    S = [(), (), (), (7, 8), ()]
    assert classify_types(U, S) == (1, 0, 4, 2, 3)


def test_structure_from_counts_rejects():
    with pytest.raises(ValueError):
        structure_from_counts([2, 0, 0, 0], [True, False, False, False])
    with pytest.raises(ValueError):
        structure_from_counts([1, 0, 0, 0], [True, False, False, True])


@settings(max_examples=60)
@given(st.integers(4, 9), st.randoms(use_true_random=False))
def test_decompose_recovers_generated_structure(k, rnd):
    tri = [rnd.choice((0, 1, 1, 2)) for _ in range(k)]
    sp = [rnd.random() < 0.25 for _ in range(k)]
    try:
        want = structure_from_counts(tri, sp)
    except ValueError:
        return
    g = hole_graph(tri, sp)
    got = decompose_around_hole(g, list(range(k)))
    assert isinstance(got, HoleStructure)
    assert got == want
    h, index = structure_graph(got)
    assert h == g and index == {v: v for v in range(g.n)}


def test_decompose_k5_from_big_clique():
    g = hole_graph([1, 0, 0, 0], [False] * 4)
    # grow the triangle at vertex 0 into a K4
    edges = g.edges() + [(7, 4), (7, 5), (7, 6), (7, 0)]
    res = decompose_around_hole(Graph.from_edges(8, edges), [0, 1, 2, 3])
    assert isinstance(res, Certificate) and res.family == Family.K5


def test_decompose_k5_from_triple_pair():
    g = hole_graph([0] * 4, [True, False, False, False])
    edges = g.edges() + [(6, 0), (6, 1), (6, 4), (6, 5)]
    h = Graph.from_edges(7, edges)
    res = decompose_around_hole(h, [0, 1, 2, 3])
    assert res.family == Family.K5 and check_certificate(h, res)


def test_decompose_h0():
    g = hole_graph([1, 0, 0, 0], [True, False, False, True])
    res = decompose_around_hole(g, [0, 1, 2, 3])
    assert res.family == Family.H0 and check_certificate(g, res)


def test_decompose_diamond_first():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4), (0, 5), (4, 5)])
    res = decompose_around_hole(g, [0, 1, 2, 3])
    assert isinstance(res, Certificate) and res.family == Family.DIAMOND
    assert check_certificate(g, res)


def test_structure_errors():
    c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    split = Graph.from_edges(6, c5 + [(5, 0), (5, 1), (5, 3)])
    with pytest.raises(StructureError):
        decompose_around_hole(split, [0, 1, 2, 3, 4])
    far = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2)])
    with pytest.raises(StructureError):
        decompose_around_hole(far, [0, 1, 2, 3])


def test_pruning_then_structure_on_decorated_hole():
    rng = random.Random(5)
    g = add_simplicial(cycle_graph(6), rng, 5)
    core, back, _ = prune_simplicial(g)
    assert sorted(back.values()) == list(range(6))

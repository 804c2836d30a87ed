import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cavpg.decompose import structure_from_counts, structure_graph
from cavpg.families import Certificate, Family, K4Chain, check_certificate, check_k4_chain
from cavpg.orientation import B, F, N, find_feasible_orientation, is_feasible


def all_type(t, k, pairs=None):
    tri = {0: 0, 1: 1, 4: 2}
    return structure_from_counts([tri[t]] * k, pairs or [False] * k)


def exhaustive(hs):
    return any(is_feasible(hs, o)[0] for o in itertools.product((F, B, N), repeat=hs.k))


def test_feasibility_conditions():
    hs = all_type(1, 4)
    assert is_feasible(hs, (F, F, F, F)) == (True, None)
    assert is_feasible(hs, (N, N, N, N)) == (False, 5)
    assert is_feasible(all_type(1, 5), (F,) * 5) == (False, 6)
    hs = structure_from_counts([0, 0, 0, 0], [True, False, False, False])
    assert is_feasible(hs, (F, N, N, N)) == (False, 2)
    hs = structure_from_counts([2, 0, 0, 0], [False] * 4)
    assert is_feasible(hs, (F, N, N, F)) == (False, 3)
    assert is_feasible(hs, (B, N, N, F)) == (True, None)


def test_type3_condition():
    # vertex 1 has a pair on edge 1 and a triangle: v_0 must point into it
    hs = structure_from_counts([0, 1, 0, 0], [False, True, False, False])
    assert hs.types == (0, 3, 2, 0)
    assert is_feasible(hs, (B, N, N, N)) == (False, 4)
    assert is_feasible(hs, (F, N, N, N)) == (True, None)


def test_wrong_length():
    with pytest.raises(ValueError):
        is_feasible(all_type(1, 4), (F, F))


@pytest.mark.parametrize("k", [4, 6, 8])
def test_even_all_type1_forward(k):
    assert find_feasible_orientation(all_type(1, k)) == (F,) * k


@pytest.mark.parametrize("k", [5, 7])
def test_odd_all_type1_gives_f3(k):
    hs = all_type(1, k)
    c = find_feasible_orientation(hs)
    assert isinstance(c, Certificate) and c.family == Family.F3


def test_all_type0_unoriented_edge_for_odd():
    hs = all_type(0, 5)
    o = find_feasible_orientation(hs)
    assert isinstance(o, tuple) and N in o


def check_outcome(hs):
    out = find_feasible_orientation(hs)
    assert isinstance(out, tuple) == exhaustive(hs)
    g, index = structure_graph(hs)
    if isinstance(out, tuple):
        assert is_feasible(hs, out)[0]
    elif isinstance(out, Certificate):
        assert check_certificate(g, out.relabel(index))
    else:
        assert isinstance(out, K4Chain) and check_k4_chain(g, out.relabel(index))
    return out


@settings(max_examples=150)
@given(st.integers(4, 7), st.data())
def test_outcome_matches_exhaustive(k, data):
    tri = data.draw(st.lists(st.sampled_from((0, 1, 2)), min_size=k, max_size=k))
    sp = data.draw(st.lists(st.booleans(), min_size=k, max_size=k))
    try:
        hs = structure_from_counts(tri, sp)
    except ValueError:
        return
    check_outcome(hs)


def test_k4_chain_case():
    hs = structure_from_counts([0, 1, 1, 0], [True, False, True, False])
    assert hs.types == (2, 3, 3, 2)
    out = check_outcome(hs)
    assert isinstance(out, K4Chain) and out.path == (1, 2)


@pytest.mark.parametrize(
    "tri, sp, fam",
    [
        ([2, 1, 1, 1], [False] * 4, Family.F2),
        ([1, 1, 1, 1], [True, False, False, False], Family.F5),
        ([2, 0, 1, 1, 1], [False] * 5, Family.F4),
        ([2, 1, 1, 2, 0, 1], [False] * 6, Family.F1),
    ],
)
def test_named_failures(tri, sp, fam):
    out = check_outcome(structure_from_counts(tri, sp))
    assert isinstance(out, Certificate) and out.family == fam

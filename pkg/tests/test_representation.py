import pytest
from hypothesis import given
from hypothesis import strategies as st

from cavpg.representation import (
    DOWN,
    LEFT,
    RIGHT,
    UP,
    Representation,
    RepresentationFormatError,
    Segment,
    place_stub,
)

segments = st.builds(
    Segment, st.sampled_from("HV"), st.integers(-5, 5), st.integers(-5, 5), st.integers(1, 4)
)


def test_segment_geometry():
    s = Segment("H", 1, 2, 3)
    assert s.endpoints == ((1, 2), (4, 2))
    assert s.contains((3, 2)) and not s.contains((5, 2))
    assert s.is_interior((2, 2)) and not s.is_interior((1, 2))
    assert s.directions_at((1, 2)) == (RIGHT,)
    assert s.directions_at((2, 2)) == (RIGHT, LEFT)
    assert list(Segment("V", 0, 0, 2).points()) == [(0, 0), (0, 1), (0, 2)]


def test_between():
    assert Segment.between((3, 1), (0, 1)) == Segment("H", 0, 1, 3)
    assert Segment.between((2, 5), (2, 4)) == Segment("V", 2, 4, 1)
    with pytest.raises(ValueError):
        Segment.between((0, 0), (1, 1))


def test_json_round_trip_and_errors():
    rep = Representation({0: Segment("H", 0, 0, 2), 1: Segment("V", 2, 0, 2)})
    assert Representation.from_json(rep.dumps()) == rep
    assert Representation.from_json(rep.to_json()) == rep
    for bad in ['{"segs": []}', '{"segments": [{"v": 0}]}', "nope",
                '{"segments": [{"v": 0, "dir": "D", "x": 0, "y": 0, "len": 1}]}',
                '{"segments": [{"v": 0, "dir": "H", "x": 0, "y": 0, "len": 1},'
                ' {"v": 0, "dir": "H", "x": 5, "y": 0, "len": 1}]}']:
        with pytest.raises(RepresentationFormatError):
            Representation.from_json(bad)


def test_extent_and_normalise():
    rep = Representation({0: Segment("H", -2, 3, 2), 1: Segment("V", 1, -1, 5)})
    assert rep.extent() == (-2, -1, 1, 4)
    assert rep.normalised().extent() == (0, 0, 3, 5)
    assert Representation().extent() == (0, 0, 0, 0)


@given(st.dictionaries(st.integers(0, 6), segments, max_size=6), st.sampled_from("xy"), st.integers(-6, 6))
def test_insert_gap_is_monotone(segs, axis, at):
    rep = Representation(segs)
    out = rep.insert_gap(axis, at)
    for v in rep:
        a, b = rep[v], out[v]
        assert a.dir == b.dir and b.length >= a.length
        c = 0 if axis == "x" else 1
        assert b.start[c] == a.start[c] + (a.start[c] >= at)


def test_free_directions():
    rep = Representation({0: Segment("H", 0, 0, 2), 1: Segment("V", 1, 0, 3)})
    assert rep.free_directions((1, 0)) == [DOWN]
    assert rep.free_directions((5, 5)) == [RIGHT, UP, LEFT, DOWN]


def test_place_stub_stretches_when_blocked():
    rep = Representation({0: Segment("H", 0, 0, 2), 1: Segment("H", 0, 1, 2)})
    out, p = place_stub(rep, 2, (1, 0), UP)
    assert out[2].length == 1 and out[2].start == p
    assert not out[2].contains(out[1].start) and not out[1].contains(out[2].end)
    with pytest.raises(ValueError):
        place_stub(rep, 2, (0, 0), RIGHT)


def test_place_stub_downward_shift():
    rep = Representation({0: Segment("H", 0, 1, 2), 1: Segment("H", 0, 0, 2)})
    out, p = place_stub(rep, 2, (1, 1), DOWN)
    assert p == (1, 2) and out[0].start == (0, 2)
    assert out[2].endpoints == ((1, 1), (1, 2))

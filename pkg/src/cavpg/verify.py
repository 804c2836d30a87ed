"""Exact checks of contact representations on the integer grid."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import Graph, contract
from .representation import Point, Representation, Segment

TRIVIAL = "trivial-segment"
OVERLAP = "interior-overlap"
MISSING = "missing-adjacency"
EXTRA = "extra-contact"


@dataclass(frozen=True)
class Violation:
    kind: str
    vertices: tuple[int, ...]
    point: Point | None = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.point is not None:
            out["point"] = list(self.point)
        return out


def _span(s: Segment) -> tuple[int, int, int]:
    """``(line coordinate, lo, hi)`` along the segment's direction."""
    if s.dir == "H":
        return s.y, s.x, s.x + s.length
    return s.x, s.y, s.y + s.length


def relate(a: Segment, b: Segment) -> tuple[str, Point | None]:
    """Classify a pair as ``"apart"``, ``"contact"`` or ``"overlap"``.

    The point is the shared point for a contact, and some offending point
    for an overlap.
    """
    la, a0, a1 = _span(a)
    lb, b0, b1 = _span(b)
    if a.dir == b.dir:
        if la != lb:
            return "apart", None
        lo, hi = max(a0, b0), min(a1, b1)
        if lo > hi:
            return "apart", None
        p = (lo, la) if a.dir == "H" else (la, lo)
        return ("contact" if lo == hi else "overlap"), p
    # perpendicular: a's line coordinate is a position along b and vice versa
    if not (b0 <= la <= b1 and a0 <= lb <= a1):
        return "apart", None
    p = (lb, la) if a.dir == "H" else (la, lb)
    inner_a = a0 < lb < a1
    inner_b = b0 < la < b1
    return ("overlap" if inner_a and inner_b else "contact"), p


def verify_representation(g: Graph, rep: Representation) -> list[Violation]:
    """All violations of ``rep`` against ``g``; empty means valid.

    Order: trivial segments, interior overlaps, then adjacency mismatches.
    Overlapping pairs are not checked for adjacency a second time.
    """
    if set(rep) != set(g.vertices):
        raise ValueError(
            f"representation covers {sorted(rep)} but graph has vertices 0..{g.n - 1}"
        )
    out = [Violation(TRIVIAL, (v,), rep[v].start) for v in rep if rep[v].length < 1]
    overlaps, adjacency = [], []
    vs = sorted(rep)
    for i, u in enumerate(vs):
        for w in vs[i + 1 :]:
            kind, p = relate(rep[u], rep[w])
            if kind == "overlap":
                overlaps.append(Violation(OVERLAP, (u, w), p))
            elif kind == "contact" and not g.has_edge(u, w):
                adjacency.append(Violation(EXTRA, (u, w), p))
            elif kind == "apart" and g.has_edge(u, w):
                adjacency.append(Violation(MISSING, (u, w)))
    return out + overlaps + adjacency


def contact_points(rep: Representation) -> list[Point]:
    """Sorted distinct points where at least two segments touch."""
    pts = set()
    vs = sorted(rep)
    for i, u in enumerate(vs):
        for w in vs[i + 1 :]:
            kind, p = relate(rep[u], rep[w])
            if kind == "contact":
                pts.add(p)
    return sorted(pts)


def count_corners(rep: Representation, cycle: Sequence[int], g: Graph | None = None) -> int:
    """Consecutive cycle pairs (cyclically) whose segments differ in direction.

    Raises ValueError if ``cycle`` is not a cycle: repeated or missing
    vertices, fewer than three, consecutive segments that do not touch, or
    (when ``g`` is given) consecutive vertices that are not adjacent.
    """
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise ValueError(f"{list(cycle)} is not a cycle")
    corners = 0
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if a not in rep or b not in rep:
            raise ValueError(f"vertex {a if a not in rep else b} has no segment")
        if g is not None and not g.has_edge(a, b):
            raise ValueError(f"{a} and {b} are not adjacent")
        if relate(rep[a], rep[b])[0] != "contact":
            raise ValueError(f"segments of {a} and {b} do not touch")
        corners += rep[a].dir != rep[b].dir
    return corners


def merge_collinear(g: Graph, rep: Representation, v: int, w: int) -> tuple[Graph, Representation]:
    """Replace the segments of adjacent ``v`` and ``w`` by their union and
    contract the edge.

    Requires the two segments to lie on one line and meet in a single shared
    endpoint. If that junction lies inside a third segment the union would
    cross it, so this is rejected as well.
    """
    if not g.has_edge(v, w):
        raise ValueError(f"{v} and {w} are not adjacent")
    a, b = rep[v], rep[w]
    kind, p = relate(a, b)
    if a.dir != b.dir or kind != "contact":
        raise ValueError(f"segments of {v} and {w} are not collinear and touching")
    for x in rep:
        if x not in (v, w) and rep[x].is_interior(p):
            raise ValueError(f"junction {p} lies inside the segment of {x}")
    ends = [q for q in a.endpoints + b.endpoints if q != p]
    merged = Segment.between(ends[0], ends[1])
    h, index = contract(g, v, w)
    segs = {index[x]: s for x, s in rep.items() if x != w}
    segs[index[v]] = merged
    return h, Representation(segs)

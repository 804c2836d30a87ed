"""Staircase layout of a hole, K4/pair gadgets, and reinsertion of pruned vertices."""

from __future__ import annotations

from collections.abc import Sequence

from .decompose import HoleStructure, Removal
from .orientation import B, F, Orient, is_feasible
from .representation import RIGHT, UP, Point, Representation, Segment, place_stub
from .verify import contact_points, relate

STRIDE = 4


def _add(p: Point, d: Point, t: int = 1) -> Point:
    return (p[0] + t * d[0], p[1] + t * d[1])


def _unit(p: Point, q: Point) -> Point:
    return ((q[0] > p[0]) - (q[0] < p[0]), (q[1] > p[1]) - (q[1] < p[1]))


def _staircase_corners(k: int) -> list[Point]:
    """Corner sequence of the hole outline; segment m runs corner m -> m+1."""
    s = STRIDE
    if k % 2 == 0:
        q = (k - 2) // 2
        pts = [(0, 0), (q * s, 0)]
    else:
        # two collinear base pieces meeting at (2, 0)
        q = (k - 3) // 2
        pts = [(2, 0), (q * s, 0)]
    x, y = pts[-1]
    for _ in range(q):
        y += s
        pts.append((x, y))
        x -= s
        pts.append((x, y))
    if k % 2:
        pts.append((0, 0))
    return pts


def attach_k4(rep: Representation, host: int, p: Point, triangle: Sequence[int]) -> Representation:
    """Three unit segments ending at the free endpoint ``p`` of ``host``."""
    if not rep[host].is_endpoint(p):
        raise ValueError(f"{p} is not an endpoint of {host}")
    if rep.at_point(p) != [host]:
        raise ValueError(f"endpoint {p} of {host} is already taken")
    dirs = rep.free_directions(p)
    assert len(dirs) == 3 and len(triangle) == 3
    for v, d in zip(sorted(triangle), dirs):
        rep, p = place_stub(rep, v, p, d)
    return rep


def _contact(rep: Representation, a: int, b: int) -> Point:
    kind, p = relate(rep[a], rep[b])
    if kind != "contact":
        raise ValueError(f"segments of {a} and {b} do not touch")
    return p


def attach_pair(rep: Representation, a: int, b: int, pair: Sequence[int]) -> Representation:
    """Two unit segments ending at the endpoint-to-endpoint contact of ``a`` and ``b``."""
    p = _contact(rep, a, b)
    if not (rep[a].is_endpoint(p) and rep[b].is_endpoint(p)) or sorted(rep.at_point(p)) != sorted((a, b)):
        raise ValueError(f"contact {p} of {a} and {b} is not a free endpoint-to-endpoint contact")
    dirs = rep.free_directions(p)
    assert len(dirs) == 2 and len(pair) == 2
    for v, d in zip(sorted(pair), dirs):
        rep, p = place_stub(rep, v, p, d)
    return rep


def build_staircase(hs: HoleStructure, o: Sequence[Orient]) -> Representation:
    """Representation of the graph described by ``hs`` under feasible orientation ``o``.

    Hole lines follow a staircase outline with stride 4. At a corner the
    head of an oriented edge is pushed one unit past the corner so that the
    corner lands in its interior; those protruding tips host the K4 gadgets.
    Pairs sit at the endpoint-to-endpoint contacts of unoriented edges.
    """
    ok, cond = is_feasible(hs, o)
    if not ok:
        raise ValueError(f"orientation violates condition {cond}")
    k = hs.k
    if k % 2 == 0:
        seq = list(range(k))
    else:
        j = next(i for i in range(k) if o[i] == 0)
        seq = [(j + 1 + m) % k for m in range(k)]
    corners = _staircase_corners(k)
    ends = [[corners[m], corners[(m + 1) % k]] for m in range(k)]
    tips: list[list[int]] = [[] for _ in range(k)]  # which end (0/1) of hole vertex i is free

    for m in range(k):
        nm = (m + 1) % k
        prev, nxt = seq[m], seq[nm]
        c = ends[m][1]
        if o[prev] == F:
            ends[nm][0] = _add(c, _unit(ends[nm][1], c))
            tips[nxt].append(0)
        elif o[prev] == B:
            ends[m][1] = _add(c, _unit(ends[m][0], c))
            tips[prev].append(1)

    pos = {v: m for m, v in enumerate(seq)}
    rep = Representation({hs.hole[i]: Segment.between(*ends[pos[i]]) for i in range(k)})
    for i in range(k):
        if len(tips[i]) < len(hs.U[i]):
            raise AssertionError(f"hole vertex {hs.hole[i]} lacks free endpoints")
        for end, tri in zip(sorted(tips[i]), hs.U[i]):
            # earlier gadgets may have stretched the grid; resolve the tip afresh
            p = rep[hs.hole[i]].endpoints[_which_end(ends[pos[i]], end)]
            rep = attach_k4(rep, hs.hole[i], p, tri)
        if hs.S[i]:
            rep = attach_pair(rep, hs.hole[i], hs.hole[(i + 1) % k], hs.S[i])
    # transpose so the outline is traversed clockwise
    rep = Representation({v: Segment.between(s.start[::-1], s.end[::-1]) for v, s in rep.items()})
    return rep.normalised()


def _which_end(ends: list[Point], end: int) -> int:
    """Index into ``Segment.endpoints`` (sorted low/high) of traversal end ``end``."""
    a, b = ends
    lo_first = a <= b
    return end if lo_first else 1 - end


def _fresh_point_on(rep: Representation, v: int) -> tuple[Representation, Point]:
    """Stretch the grid so ``v`` has an interior grid point touching nothing else."""
    s = rep[v]
    if s.dir == "H":
        rep = rep.insert_gap("x", s.x + 1)
        return rep, (s.x + 1, s.y)
    rep = rep.insert_gap("y", s.y + 1)
    return rep, (s.x, s.y + 1)


def reinsert_simplicial(rep: Representation, log: Sequence[Removal]) -> Representation:
    """Add back pruned vertices, last removed first.

    Degree 0 goes to a fresh spot right of everything, degree 1 hangs off a
    freshly created interior point of its neighbour, and degree 2 leaves the
    contact point of its two neighbours in a free direction. The last case
    relies on the graph being diamond-free, so no third line passes there.
    """
    for r in reversed(log):
        nb = r.neighbours
        if len(nb) == 0:
            x = rep.extent()[2] + 2 if len(rep) else 0
            rep = rep.with_segments({r.vertex: Segment("H", x, 0, 1)})
        elif len(nb) == 1:
            rep, p = _fresh_point_on(rep, nb[0])
            rep, _ = place_stub(rep, r.vertex, p, UP if rep[nb[0]].dir == "H" else RIGHT)
        elif len(nb) == 2:
            a, b = nb
            p = _contact(rep, a, b)
            if sorted(rep.at_point(p)) != sorted(nb):
                raise AssertionError(f"contact {p} of {a} and {b} is shared with another line")
            rep, _ = place_stub(rep, r.vertex, p, rep.free_directions(p)[0])
        else:
            raise ValueError(f"vertex {r.vertex} has {len(nb)} neighbours")
    return rep.normalised() if len(rep) else rep


def pack(reps: Sequence[Representation], gap: int = 2) -> Representation:
    """Place representations left to right, ``gap`` units apart."""
    out: dict = {}
    x = 0
    for r in reps:
        if not len(r):
            continue
        r = r.normalised()
        out.update(r.translate(x, 0))
        x += r.extent()[2] + gap
    return Representation(out)


def render_svg(rep: Representation, scale: int = 10, margin: int = 10) -> str:
    """SVG with one ``line`` per segment and a dot at every contact point."""
    x0, y0, x1, y1 = rep.extent()
    w, h = (x1 - x0) * scale + 2 * margin, (y1 - y0) * scale + 2 * margin

    def px(p: Point) -> tuple[int, int]:
        return margin + (p[0] - x0) * scale, h - margin - (p[1] - y0) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'  <rect x="0" y="0" width="{w}" height="{h}" fill="none" stroke="#cccccc"/>',
    ]
    for v, s in rep.items():
        (ax, ay), (bx, by) = px(s.start), px(s.end)
        lines.append(
            f'  <line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="black" stroke-width="2">'
            f"<title>{v}</title></line>"
        )
    for p in contact_points(rep):
        cx, cy = px(p)
        lines.append(f'  <circle cx="{cx}" cy="{cy}" r="2.5" fill="red"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


"""Exhaustive placement search for tiny graphs, used as ground truth."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, induced_subgraph
from .representation import Representation, Segment

DEFAULT_CAP = 5


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    width: int = 10
    height: int = 10
    max_len: int = 9
    cap: int = DEFAULT_CAP


@lru_cache(maxsize=8)
def _tables(w: int, h: int, max_len: int):
    """All segments inside the box plus pairwise touch / apart matrices."""
    segs = []
    for d in ("H", "V"):
        span = w if d == "H" else h
        other = h if d == "H" else w
        for c in range(other + 1):
            for lo in range(span):
                for ln in range(1, min(max_len, span - lo) + 1):
                    segs.append(Segment(d, lo, c, ln) if d == "H" else Segment(d, c, lo, ln))
    segs.sort()
    npts = (w + 1) * (h + 1)
    pts = np.zeros((len(segs), npts), dtype=np.int16)
    inner = np.zeros((len(segs), npts), dtype=np.int16)
    for i, s in enumerate(segs):
        for p in s.points():
            j = p[0] * (h + 1) + p[1]
            pts[i, j] = 1
            if not s.is_endpoint(p):
                inner[i, j] = 1
    shared = pts @ pts.T
    both_inner = inner @ inner.T
    clash = (shared >= 2) | (both_inner >= 1)
    touch = (shared == 1) & ~clash
    apart = shared == 0
    return segs, touch, apart


def _quadrant_mask(segs, w: int, h: int, fix_horizontal: bool) -> np.ndarray:
    return np.array(
        [
            s.x <= w // 2 and s.y <= h // 2 and (s.dir == "H" or not fix_horizontal)
            for s in segs
        ],
        dtype=bool,
    )


def _search(g: Graph, w: int, h: int, max_len: int) -> Representation | None:
    if g.n == 0:
        return Representation()
    segs, touch, apart = _tables(w, h, max_len)
    # reflections keep the box; a quarter turn only when it is square
    quadrant = _quadrant_mask(segs, w, h, fix_horizontal=(w == h))
    full = np.ones(len(segs), dtype=bool)
    n = g.n
    rel = [[touch if g.has_edge(i, j) else apart for j in range(n)] for i in range(n)]
    root = max(range(n), key=lambda v: (g.degree(v), -v))

    def dfs(masks: dict[int, np.ndarray], chosen: dict[int, int]) -> dict[int, int] | None:
        if not masks:
            return chosen
        # most placed neighbours, then highest degree, then fewest candidates, then id
        i = min(
            masks,
            key=lambda v: (-len(g.adj[v] & chosen.keys()), -g.degree(v), int(masks[v].sum()), v),
        )
        rest = {j: m for j, m in masks.items() if j != i}
        for c in np.flatnonzero(masks[i]):
            nxt = {}
            for j, m in rest.items():
                nxt[j] = m & rel[i][j][c]
                if not nxt[j].any():
                    break
            else:
                found = dfs(nxt, {**chosen, i: int(c)})
                if found is not None:
                    return found
        return None

    masks = {v: full for v in range(n) if v != root}
    found = None
    for c in np.flatnonzero(quadrant):
        nxt = {}
        for j, m in masks.items():
            nxt[j] = m & rel[root][j][c]
            if not nxt[j].any():
                break
        else:
            found = dfs(nxt, {root: int(c)})
            if found is not None:
                break
    if found is None:
        return None
    return Representation({v: segs[c] for v, c in found.items()})


def brute_force_search(
    g: Graph, width: int = 10, height: int = 10, max_len: int = 9, cap: int = DEFAULT_CAP
) -> Representation | None:
    """First representation inside ``[0, width] x [0, height]`` with line
    lengths at most ``max_len``, or None when the box is exhausted.

    A vertex of maximum degree is placed first, inside the lower-left
    quadrant; after that the vertex with the most placed neighbours goes
    next, ties going to higher degree and then to fewer surviving
    candidates. Candidate sets are filtered after every placement, and the
    scan order over segments is fixed, so the answer is deterministic.
    Before the full search every subgraph with one vertex deleted is
    searched, since a subgraph that does not fit rules out the whole graph.
    """
    if g.n > cap:
        raise OracleCapError(f"graph has {g.n} vertices, oracle cap is {cap}")
    if min(width, height, max_len) < 1:
        raise ValueError("grid bounds and maximum length must be at least 1")
    return _search_with_subgraphs(g, width, height, max_len)


def _search_with_subgraphs(g: Graph, w: int, h: int, max_len: int) -> Representation | None:
    if g.n >= 3:
        for v in g.vertices:
            sub, _ = induced_subgraph(g, [x for x in g.vertices if x != v])
            if _search_with_subgraphs(sub, w, h, max_len) is None:
                return None
    return _search(g, w, h, max_len)

"""Chordality testing and hole extraction."""

from __future__ import annotations

from collections import deque

from .graph import Graph


def mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; ties broken by smallest id.

    The reverse of the visiting order is a perfect elimination ordering
    exactly when ``g`` is chordal.
    """
    weight = [0] * g.n
    done = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not done[w]:
                weight[w] += 1
    return order


def _peo_violation(g: Graph, peo: list[int]) -> tuple[int, int, int] | None:
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = sorted(w for w in g.adj[v] if pos[w] > pos[v])
        for i, a in enumerate(later):
            for b in later[i + 1 :]:
                if b not in g.adj[a]:
                    return v, a, b
    return None


def is_chordal(g: Graph) -> bool:
    return _peo_violation(g, mcs_order(g)[::-1]) is None


def _hole_through(g: Graph, v: int, a: int, b: int) -> list[int] | None:
    """Chordless cycle ``v a ... b`` avoiding the rest of ``N[v]``, if one exists."""
    blocked = (g.adj[v] | {v}) - {a, b}
    parent = {a: a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in sorted(g.adj[x]):
            if y not in parent and y not in blocked:
                # a and b are non-adjacent, so a direct a-b hop never happens
                parent[y] = x
                queue.append(y)
    if b not in parent:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return [v] + path[::-1]


def find_hole(g: Graph) -> list[int] | None:
    """Some hole of ``g`` as a cyclic vertex list, or None if ``g`` is chordal.

    The elimination-order witness is tried first; if its two non-adjacent
    neighbours are separated, every centre vertex is scanned in id order.
    """
    witness = _peo_violation(g, mcs_order(g)[::-1])
    if witness is None:
        return None
    hole = _hole_through(g, *witness)
    if hole is not None:
        return hole
    for v in range(g.n):
        nb = sorted(g.adj[v])
        for i, a in enumerate(nb):
            for b in nb[i + 1 :]:
                if b not in g.adj[a]:
                    hole = _hole_through(g, v, a, b)
                    if hole is not None:
                        return hole
    raise AssertionError("non-chordal graph without a hole")


def is_hole(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != consecutive:
                return False
    return True

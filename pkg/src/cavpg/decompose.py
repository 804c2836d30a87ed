"""Simplicial pruning and the hole structure of diamond-free circular-arc graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .families import Certificate, Family, find_diamond
from .graph import Graph, induced_subgraph


class StructureError(Exception):
    """The input cannot be a circular-arc graph around the given hole."""


@dataclass(frozen=True)
class Removal:
    vertex: int
    neighbours: tuple[int, ...]


def prune_simplicial(g: Graph) -> tuple[Graph, dict[int, int], list[Removal]]:
    """Repeatedly delete simplicial vertices of degree at most two.

    Returns the core, the map from core ids to ids of ``g``, and the removal
    log in deletion order (ids of ``g``). Replaying the log backwards on the
    core rebuilds ``g``.
    """
    alive = set(g.vertices)
    nbrs = {v: set(g.adj[v]) for v in g.vertices}
    log = []

    def removable(v: int) -> bool:
        nb = nbrs[v]
        if len(nb) > 2:
            return False
        if len(nb) == 2:
            a, b = nb
            return b in nbrs[a]
        return True

    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if v in alive and removable(v):
                log.append(Removal(v, tuple(sorted(nbrs[v]))))
                for w in nbrs[v]:
                    nbrs[w].discard(v)
                alive.discard(v)
                changed = True
    core, index = induced_subgraph(g, alive)
    back = {i: v for v, i in index.items()}
    return core, back, log


def replay(core: Graph, back: dict[int, int], log: list[Removal], n: int) -> Graph:
    """Rebuild the pre-pruning graph from the core and the removal log."""
    edges = {(back[u], back[v]) for u, v in core.edges()}
    for r in reversed(log):
        for w in r.neighbours:
            edges.add((min(r.vertex, w), max(r.vertex, w)))
    return Graph.from_edges(n, edges)


@dataclass(frozen=True)
class HoleStructure:
    """Hole ``v_0..v_{k-1}`` plus the sets around it.

    ``U[i]`` holds the triangles seeing only ``v_i``; ``S[i]`` is the pair
    (or empty tuple) seeing exactly ``v_i`` and ``v_{i+1}``.
    """

    hole: tuple[int, ...]
    U: tuple[tuple[tuple[int, int, int], ...], ...]
    S: tuple[tuple[int, ...], ...]
    types: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.hole)

    def has_pair(self, i: int) -> bool:
        return bool(self.S[i % self.k])

    def vertex_set(self) -> set[int]:
        out = set(self.hole)
        for tris in self.U:
            for t in tris:
                out |= set(t)
        for s in self.S:
            out |= set(s)
        return out


_TYPE_TABLE = {(0, False): 0, (1, False): 1, (0, True): 2, (1, True): 3, (2, False): 4}


def classify_types(U, S) -> tuple[int, ...]:
    """Type 0..4 of every hole vertex from its triangle count and pairs."""
    k = len(U)
    types = []
    for i in range(k):
        key = (len(U[i]), bool(S[i]) or bool(S[i - 1]))
        if key not in _TYPE_TABLE:
            raise ValueError(f"vertex {i}: {key[0]} triangles with pair={key[1]} fits no type")
        types.append(_TYPE_TABLE[key])
    return tuple(types)


def structure_from_counts(triangles, spairs) -> HoleStructure:
    """HoleStructure for the generated graph ``hole_graph(triangles, spairs)``.

    Mirrors the id layout of :func:`cavpg.families.hole_graph`. Raises
    ValueError for counts no reduced hole structure can have: a vertex
    with more than two triangles and pairs together, or one fitting no type.
    """
    k = len(triangles)
    for i in range(k):
        if triangles[i] + bool(spairs[i]) + bool(spairs[i - 1]) > 2:
            raise ValueError(f"vertex {i} carries more than two triangles and pairs")
    nxt = k
    U, S = [], []
    for i in range(k):
        tris = []
        for _ in range(triangles[i]):
            tris.append((nxt, nxt + 1, nxt + 2))
            nxt += 3
        U.append(tuple(tris))
        if spairs[i]:
            S.append((nxt, nxt + 1))
            nxt += 2
        else:
            S.append(())
    return HoleStructure(tuple(range(k)), tuple(U), tuple(S), classify_types(U, S))


def decompose_around_hole(core: Graph, hole: list[int]) -> HoleStructure | Certificate:
    """Partition ``core`` around ``hole`` or return a K4-e/K5/H0 certificate.

    Raises StructureError when some vertex does not fit the circular-arc
    pattern (its hole neighbourhood is not one vertex or one hole edge, or
    two classes that must be anticomplete are joined).
    """
    d = find_diamond(core)
    if d is not None:
        return Certificate(Family.DIAMOND, d)
    k = len(hole)
    pos = {v: i for i, v in enumerate(hole)}
    u_sets: list[list[int]] = [[] for _ in range(k)]
    s_sets: list[list[int]] = [[] for _ in range(k)]
    home = {}
    for x in core.vertices:
        if x in pos:
            continue
        seen = sorted(pos[v] for v in core.adj[x] if v in pos)
        if len(seen) == 1:
            u_sets[seen[0]].append(x)
            home[x] = ("U", seen[0])
        elif len(seen) == 2 and (seen[1] - seen[0]) % k in (1, k - 1):
            i = seen[0] if seen[1] - seen[0] == 1 else seen[1]
            s_sets[i].append(x)
            home[x] = ("S", i)
        else:
            where = [hole[i] for i in seen]
            raise StructureError(f"vertex {x} sees hole vertices {where}")
    for x, cls in home.items():
        for y in core.adj[x]:
            if y in home and home[y] != cls:
                raise StructureError(f"vertices {x} and {y} sit in different classes but are adjacent")

    U = []
    for i in range(k):
        cliques = []
        sub, index = induced_subgraph(core, u_sets[i])
        back = {j: v for v, j in index.items()}
        for comp in sub.components():
            members = tuple(sorted(back[j] for j in comp))
            if not core.is_clique(members):
                raise AssertionError("diamond-free neighbourhood with a non-clique component")
            if len(members) >= 4:
                return Certificate(Family.K5, tuple(sorted(members[:4] + (hole[i],))))
            if len(members) < 3:
                raise StructureError(f"clique {list(members)} at {hole[i]} survived pruning")
            cliques.append(members)
        U.append(cliques)
    for i in range(k):
        s = sorted(s_sets[i])
        if len(s) >= 3:
            return Certificate(Family.K5, tuple(sorted(s[:3] + [hole[i], hole[(i + 1) % k]])))
        if len(s) == 1:
            raise StructureError(f"lone vertex {s[0]} on hole edge survived pruning")

    for i in range(k):
        # pairs at v_i behave like extra triangles: S_i with v_{i+1}, S_{i-1} with v_{i-1}
        tris = [tuple(t) for t in U[i]]
        if s_sets[i]:
            tris.append(tuple(sorted(s_sets[i] + [hole[(i + 1) % k]])))
        if s_sets[i - 1]:
            tris.append(tuple(sorted(s_sets[i - 1] + [hole[i - 1]])))
        if len(tris) >= 3:
            vs = {hole[i]}
            for t in tris[:3]:
                vs |= set(t)
            return Certificate(Family.H0, tuple(sorted(vs)))

    U_t = tuple(tuple(c) for c in U)
    S_t = tuple(tuple(sorted(s)) for s in s_sets)
    return HoleStructure(tuple(hole), U_t, S_t, classify_types(U_t, S_t))


def structure_graph(hs: HoleStructure) -> tuple[Graph, dict[int, int]]:
    """The graph a HoleStructure describes, on dense ids.

    Returns the graph and the map from structure ids to its ids.
    """
    ids = sorted(hs.vertex_set())
    index = {v: i for i, v in enumerate(ids)}
    k = hs.k
    edges = [(index[hs.hole[i]], index[hs.hole[(i + 1) % k]]) for i in range(k)]
    for i in range(k):
        for t in hs.U[i]:
            group = [hs.hole[i], *t]
            edges += [(index[a], index[b]) for j, a in enumerate(group) for b in group[j + 1 :]]
        if hs.S[i]:
            group = [hs.hole[i], hs.hole[(i + 1) % k], *hs.S[i]]
            edges += [(index[a], index[b]) for j, a in enumerate(group) for b in group[j + 1 :]]
    return Graph.from_edges(len(ids), edges), index

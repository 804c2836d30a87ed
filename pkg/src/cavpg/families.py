"""Forbidden graphs for contact B0-VPG: generators, detectors, certificates.

The eight families are K5, the diamond (K4-e), H0, and the parameterised
families F1..F5. Vertex numbering of generated graphs: structural vertices
(hole or path) come first, attachments follow in index order.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, complete_graph, induced_subgraph


class Family(str, enum.Enum):
    K5 = "K5"
    DIAMOND = "K4-e"
    H0 = "H0"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"


@dataclass(frozen=True)
class Certificate:
    family: Family
    vertices: tuple[int, ...]
    hole: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"family": self.family.value, "vertices": list(self.vertices)}
        if self.hole is not None:
            out["hole"] = list(self.hole)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> Certificate:
        hole = obj.get("hole")
        return cls(Family(obj["family"]), tuple(sorted(obj["vertices"])), tuple(hole) if hole else None)

    def relabel(self, back: Sequence[int] | dict[int, int]) -> Certificate:
        """Translate ids through ``back`` (new id -> original id)."""
        hole = tuple(back[v] for v in self.hole) if self.hole is not None else None
        return Certificate(self.family, tuple(sorted(back[v] for v in self.vertices)), hole)


def _cert(family: Family, vertices: Iterable[int], hole: Iterable[int] | None = None) -> Certificate:
    return Certificate(family, tuple(sorted(set(vertices))), tuple(hole) if hole is not None else None)


# --- generators ------------------------------------------------------------


def make_k5() -> Graph:
    return complete_graph(5)


def make_diamond() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def make_h0() -> Graph:
    """Vertex 0 complete to three pairwise anticomplete triangles."""
    edges = []
    for t in range(3):
        a, b, c = 1 + 3 * t, 2 + 3 * t, 3 + 3 * t
        edges += [(a, b), (a, c), (b, c), (0, a), (0, b), (0, c)]
    return Graph.from_edges(10, edges)


def _attach_triangle(edges: list, host: int, nxt: int) -> int:
    a, b, c = nxt, nxt + 1, nxt + 2
    edges += [(a, b), (a, c), (b, c), (host, a), (host, b), (host, c)]
    return nxt + 3


def make_t_member(tree: Graph, plan: Sequence[int] | None = None) -> Graph:
    """Member of the tree family: ``tree`` plus ``plan[v]`` triangles at each ``v``.

    ``plan`` defaults to the only legal one (leaf 2, degree two 1, degree three 0).
    """
    if tree.n < 2 or len(tree.components()) != 1 or tree.m != tree.n - 1:
        raise ValueError("need a nontrivial tree")
    need = {1: 2, 2: 1, 3: 0}
    if any(tree.degree(v) > 3 for v in tree.vertices):
        raise ValueError("tree has a vertex of degree > 3")
    if plan is None:
        plan = [need[tree.degree(v)] for v in tree.vertices]
    if len(plan) != tree.n or any(plan[v] != need[tree.degree(v)] for v in tree.vertices):
        raise ValueError("triangle plan violates the leaf/degree rules")
    edges = list(tree.edges())
    nxt = tree.n
    for v in tree.vertices:
        for _ in range(plan[v]):
            nxt = _attach_triangle(edges, v, nxt)
    return Graph.from_edges(nxt, edges)


def make_f1(k: int) -> Graph:
    if k < 2:
        raise ValueError("F1 needs a path on at least 2 vertices")
    return make_t_member(Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)]))


def hole_graph(triangles: Sequence[int], spairs: Sequence[bool]) -> Graph:
    """Hole ``0..k-1`` with ``triangles[i]`` private triangles at vertex ``i``
    and, when ``spairs[i]``, an adjacent pair seeing exactly ``i`` and ``i+1``.

    No bound checking; this is the raw builder behind every hole family.
    """
    k = len(triangles)
    if len(spairs) != k or k < 4:
        raise ValueError("need k >= 4 and aligned triangle/pair lists")
    edges = [(i, (i + 1) % k) for i in range(k)]
    nxt = k
    for i in range(k):
        for _ in range(triangles[i]):
            nxt = _attach_triangle(edges, i, nxt)
        if spairs[i]:
            a, b = nxt, nxt + 1
            j = (i + 1) % k
            edges += [(a, b), (a, i), (b, i), (a, j), (b, j)]
            nxt += 2
    return Graph.from_edges(nxt, edges)


def make_f2(k: int) -> Graph:
    if k < 4 or k % 2:
        raise ValueError("F2 needs an even hole of length >= 4")
    return hole_graph([2] + [1] * (k - 1), [False] * k)


def make_f3(k: int) -> Graph:
    if k < 5 or k % 2 == 0:
        raise ValueError("F3 needs an odd hole of length >= 5")
    return hole_graph([1] * k, [False] * k)


def make_f5(k: int) -> Graph:
    """Even hole; vertices 0 and 1 share a pair and carry one triangle each."""
    if k < 4 or k % 2:
        raise ValueError("F5 needs an even hole of length >= 4")
    return hole_graph([1] * k, [True] + [False] * (k - 1))


@dataclass(frozen=True)
class F4Spec:
    """Cyclic gap pattern: the hole reads 4, gaps[0], 4, gaps[1], ...

    Each gap lists the types (0 or 1) strictly between two consecutive
    Type-4 vertices and contains exactly one 0.
    """

    gaps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.gaps:
            raise ValueError("F4 needs at least one Type-4 vertex")
        for gap in self.gaps:
            if any(t not in (0, 1) for t in gap) or gap.count(0) != 1:
                raise ValueError(f"gap {gap} must hold exactly one 0 and otherwise 1s")
        if self.length % 2 == 0:
            raise ValueError(f"F4 hole length {self.length} is even")

    @property
    def length(self) -> int:
        return len(self.gaps) + sum(len(g) for g in self.gaps)

    def types(self) -> list[int]:
        out = []
        for gap in self.gaps:
            out.append(4)
            out.extend(gap)
        return out

    @classmethod
    def from_json(cls, obj) -> F4Spec:
        gaps = obj["gaps"] if isinstance(obj, dict) else obj
        return cls(tuple(tuple(g) for g in gaps))


def make_f4(spec: F4Spec) -> Graph:
    tri = {0: 0, 1: 1, 4: 2}
    types = spec.types()
    if len(types) < 4:
        raise ValueError("hole too short")
    return hole_graph([tri[t] for t in types], [False] * len(types))


# --- detectors -------------------------------------------------------------


def _bits(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _clique_of_size(g: Graph, size: int) -> tuple[int, ...] | None:
    nb = _bits(g)

    def grow(chosen: list[int], cand: int):
        if len(chosen) == size:
            return tuple(chosen)
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            # only larger ids remain in cand, so each clique is met once
            found = grow(chosen + [v], cand & nb[v])
            if found:
                return found
        return None

    return grow([], (1 << g.n) - 1)


def find_k5(g: Graph) -> tuple[int, ...] | None:
    return _clique_of_size(g, 5)


def find_diamond(g: Graph) -> tuple[int, ...] | None:
    for u, v in g.edges():
        common = sorted(g.adj[u] & g.adj[v])
        for i, a in enumerate(common):
            for b in common[i + 1 :]:
                if b not in g.adj[a]:
                    return tuple(sorted((u, v, a, b)))
    return None


def _triangles(g: Graph, vs: Iterable[int]) -> list[tuple[int, int, int]]:
    vs = sorted(vs)
    inside = set(vs)
    out = []
    for a in vs:
        for b in sorted(g.adj[a] & inside):
            if b <= a:
                continue
            for c in sorted(g.adj[a] & g.adj[b] & inside):
                if c > b:
                    out.append((a, b, c))
    return out


def find_h0(g: Graph) -> tuple[int, ...] | None:
    for c in range(g.n):
        if g.degree(c) < 9:
            continue
        tris = _triangles(g, g.adj[c])

        def pick(start: int, chosen: list, used: set):
            if len(chosen) == 3:
                return chosen
            for i in range(start, len(tris)):
                t = tris[i]
                if used.intersection(t) or any(g.adj[x] & used for x in t):
                    continue
                found = pick(i + 1, chosen + [t], used | set(t))
                if found:
                    return found
            return None

        found = pick(0, [], set())
        if found:
            return tuple(sorted({c, *found[0], *found[1], *found[2]}))
    return None


def _blocks_of_block_graph(g: Graph) -> list[frozenset[int]]:
    blocks = set()
    for u, v in g.edges():
        b = frozenset({u, v} | (g.adj[u] & g.adj[v]))
        if not g.is_clique(sorted(b)):
            raise ValueError("not a block graph (diamond present?)")
        blocks.add(b)
    return sorted(blocks, key=lambda b: sorted(b))


def find_f1_chordal(g: Graph) -> Certificate | None:
    """Induced F1 member in a chordal {K5, diamond}-free graph, if any.

    Such graphs are block graphs with blocks of size at most four. A path
    p1..pk qualifies when, after discarding the K4-blocks it runs through,
    its ends still lie in two K4-blocks each and its inner vertices in one;
    these K4-blocks minus their owner are the attached triangles.
    """
    blocks = _blocks_of_block_graph(g)
    if any(len(b) > 4 for b in blocks):
        raise ValueError("precondition violated: K5 present")
    of = [[] for _ in range(g.n)]
    for i, b in enumerate(blocks):
        for v in b:
            of[v].append(i)
    k4 = [len(b) == 4 for b in blocks]
    t = [sum(k4[i] for i in of[v]) for v in range(g.n)]

    parent: dict[tuple[int, int], tuple[int, int | None]] = {}
    order: list[tuple[int, int]] = []
    for p in range(g.n):
        for b in of[p]:
            if t[p] - k4[b] >= 2:
                for w in sorted(blocks[b] - {p}):
                    if (w, b) not in parent:
                        parent[(w, b)] = (p, None)
                        order.append((w, b))
    head = 0
    end = None
    while head < len(order):
        w, b = order[head]
        head += 1
        if t[w] - k4[b] >= 2:
            end = (w, b)
            break
        for b2 in of[w]:
            if b2 != b and t[w] - k4[b] - k4[b2] >= 1:
                for x in sorted(blocks[b2] - {w}):
                    if (x, b2) not in parent:
                        parent[(x, b2)] = (w, b)
                        order.append((x, b2))
    if end is None:
        return None

    path, used_blocks = [], []
    state: tuple[int, int | None] = end
    while True:
        v, b = state
        path.append(v)
        if b is None:
            break
        used_blocks.append(b)
        state = parent[(v, b)]
    path.reverse()
    used_blocks.reverse()
    on_path = set(used_blocks)
    chosen = set(path)
    for i, v in enumerate(path):
        need = 2 if i in (0, len(path) - 1) else 1
        own = [b for b in of[v] if k4[b] and b not in on_path][:need]
        assert len(own) == need
        for b in own:
            chosen |= blocks[b]
    return _cert(Family.F1, chosen)


# --- certificate checking ----------------------------------------------------
#
# Each family is recognised from its definition on the induced subgraph.
# This code shares nothing with the decomposition pipeline on purpose.


def _cycle_order(h: Graph, vs: list[int]) -> list[int] | None:
    inside = set(vs)
    if len(vs) < 4 or any(len(h.adj[v] & inside) != 2 for v in vs):
        return None
    start = min(vs)
    order, prev = [start], None
    cur = start
    while True:
        nxt = min(w for w in h.adj[cur] & inside if w != prev)
        if nxt == start:
            break
        if nxt in order:
            return None
        order.append(nxt)
        prev, cur = cur, nxt
        if len(order) > len(vs):
            return None
    return order if len(order) == len(vs) else None


def _simplicial_split(h: Graph) -> tuple[list[int], list[int]]:
    simp = [v for v in h.vertices if h.is_clique(sorted(h.adj[v]))]
    rest = [v for v in h.vertices if v not in set(simp)]
    return simp, rest


def _clique_components(h: Graph, vs: list[int]) -> list[list[int]] | None:
    sub, index = induced_subgraph(h, vs)
    back = {i: v for v, i in index.items()}
    comps = []
    for comp in sub.components():
        if not sub.is_clique(comp):
            return None
        comps.append([back[i] for i in comp])
    return comps


def hole_member_types(h: Graph) -> tuple[list[int], list[int], list[bool]] | None:
    """Read ``h`` as hole + private triangles + edge pairs.

    Returns ``(hole, types, pair_flags)`` where ``pair_flags[i]`` says the
    edge ``hole[i] hole[i+1]`` carries a pair, or None when ``h`` does not
    have that shape or some vertex fits none of Types 0..4.
    """
    simp, rest = _simplicial_split(h)
    hole = _cycle_order(h, rest)
    if hole is None:
        return None
    k = len(hole)
    pos = {v: i for i, v in enumerate(hole)}
    comps = _clique_components(h, simp)
    if comps is None:
        return None
    tri = [0] * k
    pairs = [False] * k
    for comp in comps:
        seen = {frozenset(h.adj[x] & pos.keys()) for x in comp}
        if len(seen) != 1:
            return None
        ids = sorted(pos[v] for v in seen.pop())
        if len(ids) == 1 and len(comp) == 3:
            tri[ids[0]] += 1
        elif len(ids) == 2 and len(comp) == 2 and (ids[1] - ids[0]) % k in (1, k - 1):
            i = ids[1] if (ids[0] - ids[1]) % k == 1 else ids[0]
            if pairs[i]:
                return None
            pairs[i] = True
        else:
            return None
    types = []
    for i in range(k):
        s = pairs[i] or pairs[i - 1]
        key = (tri[i], s)
        table = {(0, False): 0, (1, False): 1, (0, True): 2, (1, True): 3, (2, False): 4}
        if key not in table:
            return None
        types.append(table[key])
    return hole, types, pairs


def _is_f4_pattern(types: list[int]) -> bool:
    k = len(types)
    fours = [i for i, t in enumerate(types) if t == 4]
    if k % 2 == 0 or not fours or any(t in (2, 3) for t in types):
        return False
    for j, a in enumerate(fours):
        b = fours[(j + 1) % len(fours)]
        span = (b - a - 1) % k if len(fours) > 1 else k - 1
        between = [types[(a + 1 + d) % k] for d in range(span)]
        if between.count(0) != 1:
            return False
    return True


def _is_f1(h: Graph) -> bool:
    simp, path = _simplicial_split(h)
    if len(path) < 2:
        return False
    psub, _ = induced_subgraph(h, path)
    if psub.m != len(path) - 1 or len(psub.components()) != 1 or any(psub.degree(v) > 2 for v in psub.vertices):
        return False
    comps = _clique_components(h, simp)
    if comps is None:
        return False
    count = {v: 0 for v in path}
    pset = set(path)
    for comp in comps:
        if len(comp) != 3:
            return False
        owners = {frozenset(h.adj[x] & pset) for x in comp}
        if len(owners) != 1:
            return False
        owner = owners.pop()
        if len(owner) != 1:
            return False
        count[next(iter(owner))] += 1
    for v in path:
        d = len(h.adj[v] & pset)
        if count[v] != (2 if d == 1 else 1):
            return False
    return True


def _is_h0(h: Graph) -> bool:
    if h.n != 10 or h.m != 18:
        return False
    centres = [v for v in h.vertices if h.degree(v) == 9]
    if len(centres) != 1:
        return False
    rest = [v for v in h.vertices if v != centres[0]]
    sub, _ = induced_subgraph(h, rest)
    comps = sub.components()
    return len(comps) == 3 and all(len(c) == 3 and sub.is_clique(c) for c in comps)


def check_certificate(g: Graph, cert: Certificate) -> bool:
    """Does ``cert.vertices`` induce in ``g`` a member of ``cert.family``?"""
    try:
        vs = sorted(set(cert.vertices))
        if len(vs) != len(cert.vertices) or any(not 0 <= v < g.n for v in vs):
            return False
        h, index = induced_subgraph(g, vs)
        fam = Family(cert.family)
    except (ValueError, TypeError):
        return False
    if fam is Family.K5:
        return h.n == 5 and h.m == 10
    if fam is Family.DIAMOND:
        return h.n == 4 and h.m == 5
    if fam is Family.H0:
        return _is_h0(h)
    if fam is Family.F1:
        return _is_f1(h)
    read = hole_member_types(h)
    if read is None:
        return False
    hole, types, _ = read
    if cert.hole is not None:
        if any(v not in index for v in cert.hole):
            return False
        given = [index[v] for v in cert.hole]
        if sorted(given) != sorted(hole) or len(given) != len(hole):
            return False
    k = len(hole)
    if fam is Family.F2:
        return k % 2 == 0 and types.count(4) == 1 and types.count(1) == k - 1
    if fam is Family.F3:
        return k % 2 == 1 and types.count(1) == k
    if fam is Family.F5:
        return k % 2 == 0 and types.count(3) == 2 and types.count(1) == k - 2
    if fam is Family.F4:
        return _is_f4_pattern(types)
    return False


# --- K4 chains ---------------------------------------------------------------


@dataclass(frozen=True)
class K4Chain:
    """Induced path with K4s hanging off it: two at each end, one inside.

    No K4 may contain a second path vertex, and the K4s at a single path
    vertex must differ. A line has two endpoints and every K4 consumes one
    endpoint of each of its lines, so the ends have no free endpoint and the
    path cannot be drawn. F1 is the special case where the K4s minus their
    owners are pairwise anticomplete triangles; this covers the remaining
    obstructions met by the orientation procedure.
    """

    path: tuple[int, ...]
    cliques: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set(self.path)
        for group in self.cliques:
            for q in group:
                vs |= set(q)
        return tuple(sorted(vs))

    def to_json(self) -> dict:
        return {
            "kind": "K4-chain",
            "path": list(self.path),
            "cliques": [[list(q) for q in group] for group in self.cliques],
            "vertices": list(self.vertices),
        }

    def relabel(self, back) -> K4Chain:
        return K4Chain(
            tuple(back[v] for v in self.path),
            tuple(tuple(tuple(sorted(back[x] for x in q)) for q in group) for group in self.cliques),
        )


def check_k4_chain(g: Graph, chain: K4Chain) -> bool:
    p = list(chain.path)
    if len(p) < 2 or len(set(p)) != len(p) or len(chain.cliques) != len(p):
        return False
    if any(not 0 <= v < g.n for v in chain.vertices):
        return False
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if g.has_edge(p[i], p[j]) != (j == i + 1):
                return False
    pset = set(p)
    for i, (v, group) in enumerate(zip(p, chain.cliques)):
        need = 2 if i in (0, len(p) - 1) else 1
        qs = {frozenset(q) for q in group}
        if len(group) != need or len(qs) != need:
            return False
        for q in qs:
            if len(q) != 4 or v not in q or q & pset != {v} or not g.is_clique(sorted(q)):
                return False
    return True


def brute_force_families(g: Graph, max_size: int | None = None) -> list[Certificate]:
    """Every vertex subset that passes :func:`check_certificate` for some family.

    Exponential; for cross-checking tiny instances only.
    """
    out = []
    top = g.n if max_size is None else min(g.n, max_size)
    for size in range(4, top + 1):
        for vs in combinations(range(g.n), size):
            for fam in Family:
                c = Certificate(fam, vs)
                if check_certificate(g, c):
                    out.append(c)
    return out

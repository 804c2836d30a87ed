"""Immutable simple undirected graphs on dense integer vertex ids."""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the frozenset of neighbours of ``v``. Build instances with
    :meth:`from_edges`; the constructor trusts its input.
    """

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @property
    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbours(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.adj[v]

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"unknown vertex {v} (n={self.n})")

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(vs[j] in self.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def anticomplete(self, a: Iterable[int], b: Iterable[int]) -> bool:
        b = set(b)
        return all(not (self.adj[x] & b) for x in a)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``w``; returns it with the old-to-new id map.

    New ids follow the ascending order of the old ones.
    """
    ws = sorted(set(w))
    for v in ws:
        g._check(v)
    index = {v: i for i, v in enumerate(ws)}
    edges = [(index[u], index[v]) for u in ws for v in g.adj[u] if v in index and u < v]
    return Graph.from_edges(len(ws), edges), index


def contract(g: Graph, v: int, w: int) -> tuple[Graph, dict[int, int]]:
    """Contract ``w`` into ``v``: ``w`` disappears and its edges move to ``v``.

    Remaining vertices are renumbered densely; the map sends old ids
    (everything except ``w``) to new ones.
    """
    g._check(v)
    g._check(w)
    if v == w:
        raise ValueError("cannot contract a vertex with itself")
    keep = [x for x in range(g.n) if x != w]
    index = {x: i for i, x in enumerate(keep)}
    edges = set()
    for a, b in g.edges():
        a = v if a == w else a
        b = v if b == w else b
        if a != b:
            edges.add((min(index[a], index[b]), max(index[a], index[b])))
    return Graph.from_edges(len(keep), sorted(edges)), index


def is_simplicial(g: Graph, v: int) -> bool:
    return g.is_clique(sorted(g.neighbours(v)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def disjoint_union(*gs: Graph) -> Graph:
    edges, off = [], 0
    for h in gs:
        edges += [(u + off, v + off) for u, v in h.edges()]
        off += h.n
    return Graph.from_edges(off, edges)


# --- standard small graphs -------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# --- serialisation ---------------------------------------------------------


def to_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def _validated(n, edges) -> Graph:
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError(f"bad vertex count {n!r}")
    seen = set()
    for e in edges:
        if len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise GraphFormatError(f"bad edge {e!r}")
        u, v = e
        if not 0 <= u < v < n:
            raise GraphFormatError(f"edge {u} {v} violates 0 <= u < v < n")
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def parse_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphFormatError("missing header 'n m'")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    n, m = nums[0], nums[1]
    rest = nums[2:]
    if len(rest) != 2 * m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rest) / 2:g}")
    return _validated(n, [(rest[2 * i], rest[2 * i + 1]) for i in range(m)])


def parse_json(obj) -> Graph:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError("JSON graph needs keys 'n' and 'edges'")
    return _validated(obj["n"], [tuple(e) if isinstance(e, list) else (e,) for e in obj["edges"]])


def parse_graph(text: str) -> Graph:
    """Parse either format, picking JSON when the first non-blank char is ``{``."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json(stripped)
    return parse_text(text)

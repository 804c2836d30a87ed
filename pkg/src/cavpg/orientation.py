"""Feasible orientations of a hole, or a forbidden subgraph explaining why none exists.

Edge ``i`` joins ``v_i`` and ``v_{i+1}``. FORWARD means ``v_i -> v_{i+1}``.
An arc ``x -> y`` says the two lines meet at an endpoint of ``x`` lying in
the interior of ``y``; an unoriented edge meets endpoint to endpoint.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence

from .decompose import HoleStructure, structure_graph
from .families import Certificate, Family, K4Chain, check_certificate


class Orient(enum.IntEnum):
    BACKWARD = -1
    NONE = 0
    FORWARD = 1


F, B, N = Orient.FORWARD, Orient.BACKWARD, Orient.NONE


def is_feasible(hs: HoleStructure, o: Sequence[Orient]) -> tuple[bool, int | None]:
    """Check the feasibility conditions; returns ``(ok, first failed condition)``.

    Condition 1 (no edge oriented both ways) holds by construction of the
    per-edge encoding.
    """
    k = hs.k
    if len(o) != k:
        raise ValueError(f"orientation has {len(o)} edges, hole has {k}")
    t = hs.types
    for i in range(k):
        if hs.S[i] and o[i] != N:
            return False, 2
    for i in range(k):
        if t[i] == 4 and not (o[i - 1] == F and o[i] == B):
            return False, 3
    for i in range(k):
        if t[i] == 3:
            if hs.S[i] and o[i - 1] != F:
                return False, 4
            if hs.S[i - 1] and o[i] != B:
                return False, 4
    for i in range(k):
        if t[i] == 1 and not (o[i - 1] == F or o[i] == B):
            return False, 5
    if k % 2 and all(x != N for x in o):
        return False, 6
    return True, None


class _Builder:
    """Certificate assembly over a fixed hole structure."""

    def __init__(self, hs: HoleStructure):
        self.hs = hs
        self.k = hs.k
        self._graph = None

    def graph(self):
        if self._graph is None:
            self._graph = structure_graph(self.hs)
        return self._graph

    def v(self, i: int) -> int:
        return self.hs.hole[i % self.k]

    def hole_with(self, per_vertex: int | None = None, pairs: bool = True) -> set[int]:
        out = set(self.hs.hole)
        for i in range(self.k):
            tris = self.hs.U[i] if per_vertex is None else self.hs.U[i][:per_vertex]
            for t in tris:
                out |= set(t)
            if pairs:
                out |= set(self.hs.S[i])
        return out

    def cert(self, family: Family, vs: set[int]) -> Certificate:
        return Certificate(family, tuple(sorted(vs)), self.hs.hole)

    def end_cliques(self, i: int, toward: int) -> list[tuple[int, ...]]:
        """The two K4s at an end vertex ``v_i`` of Type 3 or 4.

        ``toward`` is +1 when the path continues to ``v_{i+1}``.
        """
        hs, x = self.hs, self.v(i)
        qs = [tuple(sorted((x, *t))) for t in hs.U[i]]
        if hs.types[i % self.k] == 3:
            if hs.S[i % self.k]:
                other, pair = self.v(i + 1), hs.S[i % self.k]
            else:
                other, pair = self.v(i - 1), hs.S[(i - 1) % self.k]
            assert other != self.v(i + toward), "pair lies on the path edge"
            qs.append(tuple(sorted((x, other, *pair))))
        assert len(qs) == 2
        return qs

    def f1_or_chain(self, idx: list[int]) -> Certificate | K4Chain:
        """Obstruction along hole path ``idx`` whose ends are of Type 3 or 4."""
        first, last = idx[0], idx[-1]
        groups = [tuple(self.end_cliques(first, +1))]
        for i in idx[1:-1]:
            groups.append((tuple(sorted((self.v(i), *self.hs.U[i % self.k][0]))),))
        groups.append(tuple(self.end_cliques(last, -1)))
        path = tuple(self.v(i) for i in idx)
        vs = set(path)
        for grp in groups:
            for q in grp:
                vs |= set(q)
        cert = Certificate(Family.F1, tuple(sorted(vs)))
        g, index = self.graph()
        local = Certificate(Family.F1, tuple(sorted(index[v] for v in vs)))
        if check_certificate(g, local):
            return cert
        return K4Chain(path, groups)


def _runs_of_ones(t: Sequence[int]) -> list[list[int]]:
    """Maximal cyclic runs of Type-1 positions; requires a non-Type-1 vertex."""
    k = len(t)
    start = next(i for i in range(k) if t[i] != 1)
    runs, cur = [], []
    for d in range(1, k + 1):
        i = (start + d) % k
        if t[i] == 1:
            cur.append(i)
        elif cur:
            runs.append(cur)
            cur = []
    return sorted(runs, key=lambda r: r[0])


def find_feasible_orientation(hs: HoleStructure) -> tuple[Orient, ...] | Certificate | K4Chain:
    """Orient the hole following the four-case construction, or explain failure.

    Certificates use the ids of ``hs``. A K4Chain is returned only where the
    named families provide no witness.
    """
    out = _orient(hs)
    if isinstance(out, list):
        out = tuple(out)
        ok, cond = is_feasible(hs, out)
        if not ok:
            raise AssertionError(f"constructed orientation breaks condition {cond}: {out}")
    return out


def _orient(hs: HoleStructure):
    k, t = hs.k, hs.types
    b = _Builder(hs)
    odd = k % 2 == 1
    non1 = [i for i in range(k) if t[i] != 1]

    if not non1:
        if odd:
            return b.cert(Family.F3, b.hole_with())
        return [F] * k

    if len(non1) == 1:
        a = non1[0]
        if t[a] == 4:
            if odd:
                return b.cert(Family.F3, b.hole_with(per_vertex=1))
            return b.cert(Family.F2, b.hole_with())
        assert t[a] == 0, "a lone Type-2/3 vertex cannot occur"
        o = [F] * k
        o[(a - 1) % k] = N
        return o

    if len(non1) == 2 and (non1[1] - non1[0]) % k in (1, k - 1):
        # a = v_k and c = v_1 in the usual picture: edge a joins them
        a, c = (non1[0], non1[1]) if (non1[1] - non1[0]) % k == 1 else (non1[1], non1[0])
        ta, tc = t[a], t[c]
        chain = [(c + d) % k for d in range(k - 1)]  # edges c .. a-1
        o = [N] * k
        if (ta, tc) == (3, 3):
            if odd:
                return b.cert(Family.F3, b.hole_with(per_vertex=1, pairs=False))
            return b.cert(Family.F5, b.hole_with())
        if (ta, tc) in ((2, 3), (2, 2), (0, 0)):
            for e in chain:
                o[e] = B
            return o
        if (ta, tc) == (3, 2):
            for e in chain:
                o[e] = F
            return o
        if (ta, tc) == (4, 4):
            return b.f1_or_chain([a, c])
        if (ta, tc) in ((0, 4), (4, 0)):
            if odd:
                return b.cert(Family.F4, b.hole_with())
            if tc == 4:
                for e in chain:
                    o[e] = B
                o[a] = F
            else:
                for e in chain:
                    o[e] = F
                o[a] = B
            return o
        raise AssertionError(f"adjacent pair of types {(ta, tc)} cannot occur")

    # general case
    o = [N] * k
    for run in _runs_of_ones(t):
        s, e = run[0], run[-1]
        u, w = (s - 1) % k, (e + 1) % k
        if t[u] not in (3, 4):
            for d in range(len(run)):
                o[(u + d) % k] = F
        elif t[w] not in (3, 4):
            for d in range(len(run)):
                o[(s + d) % k] = B
        else:
            return b.f1_or_chain([u, *run, w])
    for i in range(k):
        j = (i + 1) % k
        if t[i] in (3, 4) and t[j] in (3, 4) and not hs.S[i]:
            return b.f1_or_chain([i, j])
    for i in range(k):
        if t[i] == 4 or (t[i] == 3 and hs.S[i]):
            o[(i - 1) % k] = F
        if t[i] == 4 or (t[i] == 3 and hs.S[(i - 1) % k]):
            o[i] = B
    if odd and all(x != N for x in o):
        return b.cert(Family.F4, b.hole_with())
    return o

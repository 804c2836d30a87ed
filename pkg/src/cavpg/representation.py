"""Axis-parallel grid segments and contact representations built from them."""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

Point = tuple[int, int]

# unit steps; a direction is one of these four vectors
RIGHT, UP, LEFT, DOWN = (1, 0), (0, 1), (-1, 0), (0, -1)
DIRECTIONS = (RIGHT, UP, LEFT, DOWN)


class RepresentationFormatError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Segment:
    """Horizontal (``"H"``) or vertical (``"V"``) segment anchored at its
    lower/left endpoint ``(x, y)``."""

    dir: str
    x: int
    y: int
    length: int

    @classmethod
    def between(cls, p: Point, q: Point) -> Segment:
        if p[1] == q[1] and p[0] != q[0]:
            return cls("H", min(p[0], q[0]), p[1], abs(p[0] - q[0]))
        if p[0] == q[0] and p[1] != q[1]:
            return cls("V", p[0], min(p[1], q[1]), abs(p[1] - q[1]))
        raise ValueError(f"{p} and {q} do not span an axis-parallel segment")

    @property
    def start(self) -> Point:
        return (self.x, self.y)

    @property
    def end(self) -> Point:
        if self.dir == "H":
            return (self.x + self.length, self.y)
        return (self.x, self.y + self.length)

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.start, self.end

    def contains(self, p: Point) -> bool:
        if self.dir == "H":
            return p[1] == self.y and self.x <= p[0] <= self.x + self.length
        return p[0] == self.x and self.y <= p[1] <= self.y + self.length

    def is_endpoint(self, p: Point) -> bool:
        return p == self.start or p == self.end

    def is_interior(self, p: Point) -> bool:
        return self.contains(p) and not self.is_endpoint(p)

    def directions_at(self, p: Point) -> tuple[Point, ...]:
        """Unit directions in which this segment leaves ``p`` (empty if absent)."""
        if not self.contains(p):
            return ()
        fwd, back = (RIGHT, LEFT) if self.dir == "H" else (UP, DOWN)
        if p == self.start:
            return (fwd,)
        if p == self.end:
            return (back,)
        return (fwd, back)

    def points(self) -> Iterable[Point]:
        for d in range(self.length + 1):
            yield (self.x + d, self.y) if self.dir == "H" else (self.x, self.y + d)

    def mapped(self, fx, fy) -> Segment:
        a, b = self.start, self.end
        return Segment.between((fx(a[0]), fy(a[1])), (fx(b[0]), fy(b[1])))

    def to_json(self, v: int) -> dict:
        return {"v": v, "dir": self.dir, "x": self.x, "y": self.y, "len": self.length}


class Representation(Mapping):
    """Immutable map from vertex id to Segment."""

    def __init__(self, segments: Mapping[int, Segment] | None = None):
        self._seg = dict(sorted((segments or {}).items()))

    def __getitem__(self, v: int) -> Segment:
        return self._seg[v]

    def __iter__(self):
        return iter(self._seg)

    def __len__(self) -> int:
        return len(self._seg)

    def __repr__(self) -> str:
        return f"Representation({self._seg!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Representation):
            return self._seg == other._seg
        return NotImplemented

    def extent(self) -> tuple[int, int, int, int]:
        """``(min_x, min_y, max_x, max_y)``; zeros for an empty representation."""
        if not self._seg:
            return (0, 0, 0, 0)
        pts = [p for s in self._seg.values() for p in s.endpoints]
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return min(xs), min(ys), max(xs), max(ys)

    def with_segments(self, extra: Mapping[int, Segment]) -> Representation:
        clash = set(extra) & set(self._seg)
        if clash:
            raise ValueError(f"vertices {sorted(clash)} already placed")
        return Representation({**self._seg, **extra})

    def without(self, vs: Iterable[int]) -> Representation:
        drop = set(vs)
        return Representation({v: s for v, s in self._seg.items() if v not in drop})

    def relabel(self, mapping: Mapping[int, int]) -> Representation:
        return Representation({mapping[v]: s for v, s in self._seg.items()})

    def mapped(self, fx, fy) -> Representation:
        """Apply strictly increasing coordinate maps; contacts are preserved."""
        return Representation({v: s.mapped(fx, fy) for v, s in self._seg.items()})

    def translate(self, dx: int, dy: int) -> Representation:
        return self.mapped(lambda x: x + dx, lambda y: y + dy)

    def normalised(self) -> Representation:
        x0, y0, _, _ = self.extent()
        return self.translate(-x0, -y0)

    def insert_gap(self, axis: str, at: int) -> Representation:
        """Shift every coordinate ``>= at`` on ``axis`` (``"x"``/``"y"``) by one.

        The new line ``at`` holds no endpoint and no segment runs along it.
        """
        shift = lambda c: c + 1 if c >= at else c  # noqa: E731
        ident = lambda c: c  # noqa: E731
        return self.mapped(shift, ident) if axis == "x" else self.mapped(ident, shift)

    def at_point(self, p: Point) -> list[int]:
        return [v for v, s in self._seg.items() if s.contains(p)]

    def free_directions(self, p: Point) -> list[Point]:
        used = {d for s in self._seg.values() for d in s.directions_at(p)}
        return [d for d in DIRECTIONS if d not in used]

    def to_json(self) -> dict:
        return {"segments": [s.to_json(v) for v, s in self._seg.items()]}

    def dumps(self) -> str:
        """JSON text with one segment per line."""
        rows = [json.dumps(item) for item in self.to_json()["segments"]]
        if not rows:
            return '{"segments": []}\n'
        return '{"segments": [\n  ' + ",\n  ".join(rows) + "\n]}\n"

    @classmethod
    def from_json(cls, obj) -> Representation:
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise RepresentationFormatError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or not isinstance(obj.get("segments"), list):
            raise RepresentationFormatError("representation needs a 'segments' list")
        segs = {}
        for item in obj["segments"]:
            try:
                v, d, x, y, n = item["v"], item["dir"], item["x"], item["y"], item["len"]
            except (KeyError, TypeError):
                raise RepresentationFormatError(f"bad segment entry {item!r}") from None
            if d not in ("H", "V") or not all(isinstance(c, int) for c in (v, x, y, n)):
                raise RepresentationFormatError(f"bad segment entry {item!r}")
            if v in segs:
                raise RepresentationFormatError(f"vertex {v} listed twice")
            segs[v] = Segment(d, x, y, n)
        return cls(segs)


def place_stub(rep: Representation, v: int, p: Point, d: Point) -> tuple[Representation, Point]:
    """Add a unit segment for ``v`` from ``p`` in direction ``d``.

    When the far end would land on an existing segment a blank grid line is
    inserted between ``p`` and the far end first, which cannot touch anything
    because no segment leaves ``p`` in direction ``d``. Returns the new
    representation and the (possibly moved) position of ``p``.
    """
    if d not in rep.free_directions(p):
        raise ValueError(f"direction {d} at {p} is occupied")
    q = (p[0] + d[0], p[1] + d[1])
    if rep.at_point(q):
        axis, c = ("x", 0) if d[0] else ("y", 1)
        cut = p[c] + 1 if d[c] > 0 else p[c]
        rep = rep.insert_gap(axis, cut)
        if d[c] < 0:
            p = (p[0] + 1, p[1]) if axis == "x" else (p[0], p[1] + 1)
        q = (p[0] + d[0], p[1] + d[1])
    return rep.with_segments({v: Segment.between(p, q)}), p

"""Shared generators for the test suite."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from cavpg.decompose import structure_from_counts
from cavpg.graph import Graph
from cavpg.orientation import find_feasible_orientation

TRIANGLE_WEIGHTS = (0.35, 0.5, 0.15)


def random_counts(rng: random.Random, k: int, pair_p: float = 0.2):
    """Random (triangles, spairs) for a hole of length ``k``, possibly unrealisable."""
    tri = rng.choices((0, 1, 2), weights=TRIANGLE_WEIGHTS, k=k)
    sp = [rng.random() < pair_p for _ in range(k)]
    return tri, sp


def random_feasible_structures(seed: int, count: int, kmin: int = 4, kmax: int = 10):
    """``count`` realisable hole structures whose orientation search succeeds."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(kmin, kmax)
        tri, sp = random_counts(rng, k)
        try:
            hs = structure_from_counts(tri, sp)
        except ValueError:
            continue
        if isinstance(find_feasible_orientation(hs), tuple):
            out.append((tri, sp))
    return out


def realisable_counts(k: int):
    """Every realisable (triangles, spairs) assignment on a hole of length ``k``."""
    for tri in itertools.product((0, 1, 2), repeat=k):
        for sp in itertools.product((False, True), repeat=k):
            try:
                hs = structure_from_counts(tri, sp)
            except ValueError:
                continue
            yield tri, sp, hs


def add_simplicial(g: Graph, rng: random.Random, extra: int) -> Graph:
    """Hang ``extra`` pendants or edge-ears (degree 2 on an edge) off ``g``."""
    n = g.n
    edges = list(g.edges())
    for _ in range(extra):
        if edges and rng.random() < 0.5:
            a, b = rng.choice(edges)
            edges += [(a, n), (b, n)]
        elif n:
            edges.append((rng.randrange(n), n))
        n += 1
    return Graph.from_edges(n, edges)


def small_graphs(max_n: int = 5):
    """Non-isomorphic graphs on at most ``max_n`` vertices (``max_n`` <= 7)."""
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() > max_n:
            break
        yield Graph.from_edges(h.number_of_nodes(), h.edges())


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h

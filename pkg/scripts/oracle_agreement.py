"""Recognizer decision against the bounded-grid oracle on every graph up to n vertices.

    python3 scripts/oracle_agreement.py --max-n 5
"""

from __future__ import annotations

import argparse
import time

import networkx as nx

from cavpg.graph import Graph
from cavpg.oracle import brute_force_search
from cavpg.recognize import OUT_OF_SCOPE, REPRESENTABLE, recognize


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--grid", type=int, default=10)
    args = ap.parse_args()
    t0 = time.perf_counter()
    counts = {"agree": 0, "disagree": 0, "out-of-scope": 0}
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > args.max_n:
            break
        g = Graph.from_edges(h.number_of_nodes(), h.edges())
        res = recognize(g)
        if res.decision == OUT_OF_SCOPE:
            counts["out-of-scope"] += 1
            continue
        fits = brute_force_search(g, args.grid, args.grid, args.grid - 1, cap=args.max_n) is not None
        if fits == (res.decision == REPRESENTABLE):
            counts["agree"] += 1
        else:
            counts["disagree"] += 1
            print("disagree:", sorted(g.edges()), res.decision)
    print(counts, f"{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()

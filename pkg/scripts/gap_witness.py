"""Hole structures with no feasible orientation and no member of the named families.

For each instance: build the graph, confirm that the orientation search
fails, check the K4-chain it returns, and search every vertex subset for
an induced member of the eight families.

    python3 scripts/gap_witness.py
"""

from __future__ import annotations

import argparse
import itertools
import time

from cavpg.decompose import structure_from_counts, structure_graph
from cavpg.families import K4Chain, brute_force_families, check_k4_chain, hole_graph
from cavpg.orientation import find_feasible_orientation
from cavpg.recognize import recognize

NAMED = {
    "two Type-3 ends, pairs outside": ((0, 1, 1, 0), (True, False, True, False)),
    "types 3,1,4,2": ((1, 1, 2, 0), (False, False, False, True)),
}


def chain_instances(k: int):
    for tr in itertools.product((0, 1, 2), repeat=k):
        for sp in itertools.product((False, True), repeat=k):
            try:
                hs = structure_from_counts(tr, sp)
            except ValueError:
                continue
            if isinstance(find_feasible_orientation(hs), K4Chain):
                yield tr, sp


def report(label: str, tr, sp) -> None:
    hs = structure_from_counts(tr, sp)
    g = hole_graph(tr, sp)
    chain = find_feasible_orientation(hs)
    t0 = time.perf_counter()
    members = brute_force_families(g)
    dt = time.perf_counter() - t0
    res = recognize(g)
    print(
        f"{label}: n={g.n} types={hs.types} chain_ok={check_k4_chain(g, chain)} "
        f"named_members={len(members)} ({dt:.1f}s) decision={res.decision}"
    )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", action="store_true", help="also count chain instances for k=4..7")
    args = ap.parse_args()
    for label, (tr, sp) in NAMED.items():
        report(label, tr, sp)
    if args.count:
        for k in range(4, 8):
            print(f"k={k}: {sum(1 for _ in chain_instances(k))} assignments end in a K4-chain")


if __name__ == "__main__":
    main()

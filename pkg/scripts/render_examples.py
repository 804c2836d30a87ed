"""Write SVG drawings of a few constructed layouts into a directory.

    python3 scripts/render_examples.py out/
"""

from __future__ import annotations

import argparse
import pathlib

from cavpg.families import hole_graph
from cavpg.graph import disjoint_union, path_graph
from cavpg.layout import render_svg
from cavpg.recognize import recognize
from cavpg.verify import verify_representation

EXAMPLES = {
    "c6_type1": hole_graph([1] * 6, [False] * 6),
    "c5_mixed": hole_graph([1, 0, 0, 1, 0], [False, True, False, False, False]),
    "c8_pairs": hole_graph([0, 1, 0, 1, 0, 1, 0, 1], [True, False, False, False, True, False, False, False]),
    "forest": disjoint_union(path_graph(4), path_graph(2)),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("outdir", type=pathlib.Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for name, g in EXAMPLES.items():
        res = recognize(g)
        if res.representation is None:
            print(f"{name}: {res.decision}, nothing to draw")
            continue
        clean = not verify_representation(g, res.representation)
        (args.outdir / f"{name}.svg").write_text(render_svg(res.representation))
        print(f"{name}: {len(res.representation)} segments, verifier clean={clean}")


if __name__ == "__main__":
    main()

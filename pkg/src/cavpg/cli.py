"""Command-line front end: recognize, verify, oracle, gen, render."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families as fam
from .graph import GraphFormatError, parse_graph, to_json, to_text
from .layout import render_svg
from .oracle import OracleCapError, brute_force_search
from .recognize import NOT_REPRESENTABLE, REPRESENTABLE, recognize
from .representation import Representation, RepresentationFormatError
from .verify import verify_representation

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2

PROMISE = (
    "The input is assumed to be a circular-arc graph; this is not checked. "
    "Non-chordal inputs that break the circular-arc structure are reported as "
    "out-of-scope, but chordal inputs outside the class may be accepted wrongly."
)


class CliError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_rep(path: str) -> Representation:
    """Representation JSON, or a recognize result that carries one."""
    text = _read(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}: invalid JSON: {exc}") from None
    if isinstance(obj, dict) and "segments" not in obj and "decision" in obj:
        if obj.get("representation") is None:
            raise CliError(f"{path}: result carries no representation")
        obj = obj["representation"]
    try:
        return Representation.from_json(obj)
    except RepresentationFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_recognize(args) -> int:
    g = _load_graph(args.graph)
    res = recognize(g)
    if args.json:
        sys.stdout.write(res.dumps())
    else:
        out = [f"decision: {res.decision}", f"branch: {res.branch}"]
        if res.certificate is not None:
            c = res.certificate
            out.append(f"certificate: {c.family.value} {' '.join(map(str, c.vertices))}")
        if res.obstruction is not None:
            out.append(f"obstruction: K4-chain along {' '.join(map(str, res.obstruction.path))}")
        if res.reason is not None:
            out.append(f"reason: {res.reason}")
        if res.representation is not None:
            out.append("representation:")
            out += [f"  {v} {s.dir} {s.x} {s.y} {s.length}" for v, s in res.representation.items()]
        sys.stdout.write("\n".join(out) + "\n")
    if res.decision == REPRESENTABLE:
        return EXIT_OK
    return EXIT_NO if res.decision == NOT_REPRESENTABLE else EXIT_ERROR


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    rep = _load_rep(args.rep)
    try:
        bad = verify_representation(g, rep)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    sys.stdout.write(json.dumps([v.to_json() for v in bad], indent=2) + "\n")
    return EXIT_OK if not bad else EXIT_NO


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    w, h = args.grid
    try:
        rep = brute_force_search(g, w, h, args.max_len, cap=args.cap)
    except (OracleCapError, ValueError) as exc:
        raise CliError(str(exc)) from None
    if rep is None:
        sys.stdout.write(json.dumps({"result": "exhausted", "grid": [w, h], "max_len": args.max_len}) + "\n")
        return EXIT_NO
    sys.stdout.write(rep.dumps())
    return EXIT_OK


def _generate(args):
    name = args.family.lower()
    fixed = {"k5": fam.make_k5, "k4-e": fam.make_diamond, "diamond": fam.make_diamond, "h0": fam.make_h0}
    if name in fixed:
        return fixed[name]()
    if name == "f1":
        if args.path_len is None:
            raise CliError("f1 needs --path-len")
        return fam.make_f1(args.path_len)
    if name in ("f2", "f3", "f5"):
        if args.k is None:
            raise CliError(f"{name} needs --k")
        return {"f2": fam.make_f2, "f3": fam.make_f3, "f5": fam.make_f5}[name](args.k)
    if name == "f4":
        if args.f4_spec is None:
            raise CliError("f4 needs --f4-spec")
        try:
            spec = fam.F4Spec.from_json(json.loads(_read(args.f4_spec)))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise CliError(f"{args.f4_spec}: bad F4 spec ({exc})") from None
        return fam.make_f4(spec)
    raise CliError(f"unknown family {args.family!r}")


def cmd_gen(args) -> int:
    try:
        g = _generate(args)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    text = json.dumps(to_json(g)) + "\n" if args.format == "json" else to_text(g)
    _write(text, args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    _write(render_svg(_load_rep(args.rep)), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cavpg",
        description="Contact B0-VPG recognition for circular-arc graphs. " + PROMISE,
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="decide membership; exit 0 yes, 1 no, 2 out-of-scope", description=PROMISE)
    r.add_argument("graph", help="graph file, or - for stdin")
    r.add_argument("--json", action="store_true", help="print the full result as JSON")
    r.set_defaults(func=cmd_recognize)

    v = sub.add_parser("verify", help="check a representation against a graph")
    v.add_argument("graph")
    v.add_argument("rep", help="representation JSON or a recognize --json result")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exhaustive search on a bounded grid (tiny graphs)")
    o.add_argument("graph")
    o.add_argument("--grid", nargs=2, type=int, default=(10, 10), metavar=("W", "H"))
    o.add_argument("--max-len", type=int, default=9)
    o.add_argument("--cap", type=int, default=5, help="largest vertex count accepted")
    o.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="write a forbidden-family instance")
    gen.add_argument("family", help="k5, k4-e, h0, f1, f2, f3, f4 or f5")
    gen.add_argument("--k", type=int, help="hole length for f2/f3/f5")
    gen.add_argument("--path-len", type=int, help="path length for f1")
    gen.add_argument("--f4-spec", help='JSON file such as {"gaps": [[0, 1], [1, 0]]}')
    gen.add_argument("--format", choices=("text", "json"), default="text")
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_gen)

    rd = sub.add_parser("render", help="draw a representation as SVG")
    rd.add_argument("rep")
    rd.add_argument("-o", "--output", required=True)
    rd.set_defaults(func=cmd_render)
    return p


def _error(msg: str) -> None:
    tag = "error:"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        tag = "\033[31merror:\033[0m"
    print(f"{tag} {msg}", file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        _error(str(exc))
        return EXIT_ERROR
    except OSError as exc:
        _error(f"{exc.filename or ''}: {exc.strerror}".lstrip(": "))
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

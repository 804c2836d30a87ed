"""End-to-end recognition: decision, plus a representation or a certificate."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chordal import find_hole, is_chordal
from .decompose import StructureError, decompose_around_hole, prune_simplicial
from .families import (
    Certificate,
    Family,
    K4Chain,
    find_diamond,
    find_f1_chordal,
    find_h0,
    find_k5,
)
from .graph import Graph, induced_subgraph
from .layout import build_staircase, pack, reinsert_simplicial
from .oracle import OracleConfig, brute_force_search
from .orientation import find_feasible_orientation
from .representation import Representation

REPRESENTABLE = "representable"
NOT_REPRESENTABLE = "not-representable"
OUT_OF_SCOPE = "out-of-scope"

CHORDAL = "chordal"
NON_CHORDAL = "non-chordal"

# reasons attached when a representation is absent
CHORDAL_OUT_OF_SCOPE = "chordal-construction-out-of-scope"
NO_NAMED_FAMILY = "obstruction-outside-named-families"


@dataclass
class RecognitionResult:
    decision: str
    branch: str
    representation: Representation | None = None
    certificate: Certificate | None = None
    obstruction: K4Chain | None = None
    reason: str | None = None
    vertices: tuple[int, ...] = ()
    components: list[RecognitionResult] = field(default_factory=list)

    def to_json(self, nested: bool = True) -> dict:
        out: dict = {"decision": self.decision, "branch": self.branch}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        elif self.decision == NOT_REPRESENTABLE:
            out["certificate"] = None
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_json()
        if self.representation is not None:
            out["representation"] = self.representation.to_json()
        if self.reason is not None:
            out["reason"] = self.reason
        if nested:
            out["components"] = [
                {"vertices": list(c.vertices), **c.to_json(nested=False)} for c in self.components
            ]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


@dataclass(frozen=True)
class RecognizerConfig:
    """Oracle bounds used to build representations of small chordal cores."""

    oracle: OracleConfig = OracleConfig()


def _chordal(h: Graph, cfg: RecognizerConfig) -> RecognitionResult:
    for family, finder in ((Family.K5, find_k5), (Family.H0, find_h0)):
        hit = finder(h)
        if hit is not None:
            return RecognitionResult(NOT_REPRESENTABLE, CHORDAL, certificate=Certificate(family, tuple(hit)))
    f1 = find_f1_chordal(h)
    if f1 is not None:
        return RecognitionResult(NOT_REPRESENTABLE, CHORDAL, certificate=f1)
    core, back, log = prune_simplicial(h)
    if core.n > cfg.oracle.cap:
        return RecognitionResult(REPRESENTABLE, CHORDAL, reason=CHORDAL_OUT_OF_SCOPE)
    oc = cfg.oracle
    rep = brute_force_search(core, oc.width, oc.height, oc.max_len, oc.cap)
    if rep is None:
        raise AssertionError(f"oracle found no layout for a forbidden-free chordal core of {core.n} vertices")
    rep = reinsert_simplicial(rep.relabel(back), log)
    return RecognitionResult(REPRESENTABLE, CHORDAL, representation=rep)


def _non_chordal(h: Graph) -> RecognitionResult:
    core, back, log = prune_simplicial(h)
    hole = find_hole(core)
    try:
        hs = decompose_around_hole(core, hole)
    except StructureError as exc:
        return RecognitionResult(OUT_OF_SCOPE, NON_CHORDAL, reason=str(exc))
    if isinstance(hs, Certificate):
        return RecognitionResult(NOT_REPRESENTABLE, NON_CHORDAL, certificate=hs.relabel(back))
    o = find_feasible_orientation(hs)
    if isinstance(o, Certificate):
        return RecognitionResult(NOT_REPRESENTABLE, NON_CHORDAL, certificate=o.relabel(back))
    if isinstance(o, K4Chain):
        return RecognitionResult(
            NOT_REPRESENTABLE, NON_CHORDAL, obstruction=o.relabel(back), reason=NO_NAMED_FAMILY
        )
    rep = build_staircase(hs, o).relabel(back)
    return RecognitionResult(REPRESENTABLE, NON_CHORDAL, representation=reinsert_simplicial(rep, log))


def recognize_component(h: Graph, cfg: RecognizerConfig | None = None) -> RecognitionResult:
    """Recognise a connected graph; ids in the result are those of ``h``."""
    cfg = cfg or RecognizerConfig()
    branch = CHORDAL if is_chordal(h) else NON_CHORDAL
    d = find_diamond(h)
    if d is not None:
        return RecognitionResult(NOT_REPRESENTABLE, branch, certificate=Certificate(Family.DIAMOND, tuple(d)))
    return _chordal(h, cfg) if branch == CHORDAL else _non_chordal(h)


def _to_original(res: RecognitionResult, back: dict[int, int]) -> RecognitionResult:
    return RecognitionResult(
        res.decision,
        res.branch,
        representation=res.representation.relabel(back) if res.representation is not None else None,
        certificate=res.certificate.relabel(back) if res.certificate is not None else None,
        obstruction=res.obstruction.relabel(back) if res.obstruction is not None else None,
        reason=res.reason,
        vertices=tuple(sorted(back.values())),
    )


def recognize(g: Graph, cfg: RecognizerConfig | None = None) -> RecognitionResult:
    """Decide contact B0-VPG membership of a circular-arc graph.

    Circular-arc membership is assumed, not checked. Inputs that break the
    structure this relies on come back as out-of-scope; chordal inputs
    outside the class may be accepted wrongly.
    """
    cfg = cfg or RecognizerConfig()
    parts = []
    for comp in g.components():
        h, index = induced_subgraph(g, comp)
        back = {i: v for v, i in index.items()}
        parts.append(_to_original(recognize_component(h, cfg), back))

    branch = NON_CHORDAL if any(p.branch == NON_CHORDAL for p in parts) else CHORDAL
    failed = next((p for p in parts if p.decision == NOT_REPRESENTABLE), None)
    if failed is not None:
        return RecognitionResult(
            NOT_REPRESENTABLE,
            branch,
            certificate=failed.certificate,
            obstruction=failed.obstruction,
            reason=failed.reason,
            vertices=tuple(g.vertices),
            components=parts,
        )
    scoped = next((p for p in parts if p.decision == OUT_OF_SCOPE), None)
    if scoped is not None:
        return RecognitionResult(
            OUT_OF_SCOPE, branch, reason=scoped.reason, vertices=tuple(g.vertices), components=parts
        )
    rep, reason = None, None
    if all(p.representation is not None for p in parts):
        rep = pack([p.representation for p in parts])
    else:
        reason = CHORDAL_OUT_OF_SCOPE
    return RecognitionResult(
        REPRESENTABLE, branch, representation=rep, reason=reason, vertices=tuple(g.vertices), components=parts
    )

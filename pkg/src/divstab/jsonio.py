"""JSON documents for fans, model sequences, polytopes and curve-blowup data.

Rationals travel as canonical ``"p/q"`` strings; floats are refused.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import fmt, rat
from .modelseq import ModelSegment, ModelSequence
from .polytope import HalfSpace, Polytope
from .toric import ToricFano


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def _reject_floats(value):
    raise ValueError(f"floating-point literal {value} is not allowed; use a \"p/q\" string")


def loads(text: str):
    return json.loads(text, parse_float=_reject_floats)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# fans

def fan_from_json(doc: dict) -> ToricFano:
    rays = doc["rays"]
    if not isinstance(rays, list) or not rays:
        raise ValueError("'rays' must be a nonempty list")
    rays = tuple(tuple(_int(c, "ray entry") for c in r) for r in rays)
    dim = _int(doc.get("dim", len(rays[0])), "dim")
    return ToricFano(rays, doc.get("name"), dim)


def fan_to_json(X: ToricFano) -> dict:
    return {"name": X.name, "dim": X.dim, "rays": [list(r) for r in X.rays]}


# model sequences

def sequence_from_json(doc: dict) -> ModelSequence:
    n = _int(doc["n"], "n")
    segs = []
    for s in doc["segments"]:
        segs.append(ModelSegment(rat(s["tau_lo"]), rat(s["tau_hi"]), [rat(m) for m in s["m"]]))
    return ModelSequence(n, tuple(segs))


def sequence_to_json(seq: ModelSequence) -> dict:
    return {
        "n": seq.n,
        "segments": [
            {"tau_lo": fmt(s.tau_lo), "tau_hi": fmt(s.tau_hi), "m": [fmt(m) for m in s.intersections]}
            for s in seq.segments
        ],
    }


# polytopes

def polytope_from_json(doc: dict) -> Polytope:
    dim = _int(doc["dim"], "dim")
    hs = [HalfSpace([rat(c) for c in h["normal"]], rat(h["offset"])) for h in doc["halfspaces"]]
    return Polytope(hs, dim)


def polytope_to_json(P: Polytope) -> dict:
    return {
        "dim": P.dim,
        "halfspaces": [{"normal": [fmt(c) for c in h.normal], "offset": fmt(h.offset)} for h in P.halfspaces],
    }


# curve blowups of Picard-rank-one threefolds

@dataclass(frozen=True)
class CurveBlowupParams:
    H3: Fraction
    r: int
    e: int
    h: int
    d: int
    g: int
    tau1: Fraction
    tau2: Fraction

    def astuple(self):
        return (self.H3, self.r, self.e, self.h, self.d, self.g, self.tau1, self.tau2)


def curve_params_from_json(doc: dict) -> CurveBlowupParams:
    return CurveBlowupParams(
        rat(doc["H3"]),
        *(_int(doc[k], k) for k in ("r", "e", "h", "d", "g")),
        rat(doc["tau1"]),
        rat(doc["tau2"]),
    )


def curve_params_to_json(p: CurveBlowupParams) -> dict:
    return {
        "H3": fmt(p.H3), "r": p.r, "e": p.e, "h": p.h, "d": p.d, "g": p.g,
        "tau1": fmt(p.tau1), "tau2": fmt(p.tau2),
    }


PARSERS = {
    "fan": (fan_from_json, fan_to_json),
    "sequence": (sequence_from_json, sequence_to_json),
    "okounkov_body": (polytope_from_json, polytope_to_json),
    "curve_blowup_params": (curve_params_from_json, curve_params_to_json),
}


def rat_list(values) -> list[str]:
    return [fmt(v) for v in values]

"""``divstab`` command line.

Every command builds a JSON-able report first; the human rendering is
derived from it.  Exit codes: 0 success, 2 input or validation error,
3 not Fano, 4 weight fit failure.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from math import factorial

from . import catalog, jsonio
from .closed_forms import curve_blowup_sequence, eta_curve_blowup_3fold
from .errors import FitMismatch, InvalidSequence, NotFano
from .exact import fmt, rat
from .modelseq import (
    df_from_eta,
    eta_intersection,
    eta_volume,
    slope_xi,
    validate_sequence,
    volume_at,
)
from .polytope import moment
from .toric import (
    exit_point,
    okounkov_barycenter_verdict,
    pseudoeffective_threshold,
    semistability_verdict,
    toric_eta,
    toric_volume_at,
)
from .weights import default_step, df_from_weights, eta_from_weights, weight_series

EXIT_OK, EXIT_INPUT, EXIT_NOT_FANO, EXIT_FIT = 0, 2, 3, 4


class InputError(Exception):
    def __init__(self, message, issues=()):
        super().__init__(message)
        self.issues = list(issues)


# input

def _load(args, allowed: tuple[str, ...]):
    """Resolve ``--catalog ID`` or ``PATH`` into ``(kind, object, expected)``."""
    if (args.catalog is None) == (args.path is None):
        raise InputError("give exactly one of --catalog ID or PATH")
    try:
        if args.catalog is not None:
            entry = catalog.load_entry(args.catalog)
            kind, payload, expected = entry.kind, entry.payload, entry.expected
        else:
            kind, payload = catalog.load_document(args.path)
            expected = {}
    except (OSError, KeyError, ValueError) as exc:
        raise InputError(str(exc).strip("'\"")) from None
    if kind is None:
        kind = _guess_kind(payload, allowed)
    if kind not in allowed:
        raise InputError(f"expected a {' or '.join(allowed)} document, got {kind}")
    try:
        obj = jsonio.PARSERS[kind][0](payload)
    except NotFano:
        raise
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed {kind} document: missing or mistyped field {exc}") from None
    except ValueError as exc:
        raise InputError(f"malformed {kind} document: {exc}") from None
    return kind, obj, expected


def _guess_kind(payload: dict, allowed):
    if "rays" in payload:
        return "fan"
    if "segments" in payload:
        return "sequence"
    if "halfspaces" in payload:
        return "okounkov_body"
    if "H3" in payload:
        return "curve_blowup_params"
    return allowed[0]


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.replace(" ", "").split(",") if t]


def _rat_arg(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


# expected-value checks for catalog runs

_INDEXED = re.compile(r"^(\w+)\[(\d+)\](?:\((.+)\))?$")


def _checks(report: dict, expected: dict, extra) -> list[dict]:
    out = []
    for name, item in sorted(expected.items()):
        m = _INDEXED.match(name)
        if m:
            actual = extra(m.group(1), int(m.group(2)), m.group(3))
        else:
            actual = report.get(name)
        out.append({
            "name": name,
            "expected": item["value"],
            "actual": actual,
            "source": item["source"],
            "match": actual == item["value"],
        })
    return out


def _sign_verdict(eta: Fraction) -> str:
    if eta > 0:
        return "Stable"
    if eta == 0:
        return "SemistableNotStable"
    return "NotSemistable"


# commands

def cmd_toric(args) -> dict:
    _, X, expected = _load(args, ("fan",))
    rep = semistability_verdict(X)
    exit_pt = exit_point(X)
    report = {
        "command": "toric",
        "name": X.name,
        "dim": X.dim,
        "rays": [list(r) for r in X.rays],
        "volume": fmt(rep.volume),
        "degree": fmt(factorial(X.dim) * rep.volume),
        "barycenter": jsonio.rat_list(rep.barycenter),
        "per_ray": [
            {"index": r.index, "ray": list(r.ray), "tau": fmt(r.tau), "eta": fmt(r.eta)} for r in rep.per_ray
        ],
        "verdict": rep.verdict.value,
        "witness": rep.witness,
        "witness_ray": None if rep.witness is None else list(X.rays[rep.witness]),
        "exit_point": None if exit_pt is None else jsonio.rat_list(exit_pt),
    }
    if args.at is not None and args.ray is None:
        raise InputError("--at needs --ray")
    if args.ray is not None:
        if not 0 <= args.ray < len(X.rays):
            raise InputError(f"ray index {args.ray} out of range for {len(X.rays)} rays")
        sel = {"index": args.ray, "tau": fmt(pseudoeffective_threshold(X, args.ray)), "eta": fmt(toric_eta(X, args.ray))}
        if args.at is not None:
            if args.at < 0:
                raise InputError("--at must be nonnegative")
            sel["x"] = fmt(args.at)
            sel["volume_at"] = fmt(toric_volume_at(X, args.ray, args.at))
        report["selected"] = sel

    def extra(key, i, x):
        if key == "tau":
            return report["per_ray"][i]["tau"]
        if key == "eta":
            return report["per_ray"][i]["eta"]
        if key == "volume_at":
            return fmt(toric_volume_at(X, i, rat(x)))
        return None

    if expected:
        report["checks"] = _checks(report, expected, extra)
    return report


def _validation_json(rep) -> dict:
    return {
        "ok": rep.ok,
        "errors": [str(i) for i in rep.errors],
        "warnings": [str(i) for i in rep.warnings],
    }


def _sequence_report(seq, args) -> dict:
    rep = validate_sequence(seq)
    if not rep.ok:
        raise InvalidSequence(rep.errors)
    e_int, e_vol = eta_intersection(seq), eta_volume(seq)
    Kn = args.kn if args.kn is not None else volume_at(seq, 0)
    report = {
        "n": seq.n,
        "tau": fmt(seq.tau),
        "breakpoints": jsonio.rat_list(seq.breakpoints),
        "validation": _validation_json(rep),
        "eta_intersection": fmt(e_int),
        "eta_volume": fmt(e_vol),
        "engines_agree": e_int == e_vol,
        "eta": fmt(e_int),
        "xi": fmt(slope_xi(seq)),
        "kn": fmt(Kn),
        "verdict": _sign_verdict(e_int),
    }
    if args.r is not None:
        report["r"] = args.r
        report["df"] = fmt(df_from_eta(e_int, seq.n, args.r, Kn))
    return report


def cmd_modelseq(args) -> dict:
    kind, obj, expected = _load(args, ("sequence", "curve_blowup_params"))
    if kind == "sequence":
        report = {"command": "modelseq", "input": "sequence", **_sequence_report(obj, args)}
    else:
        eta3 = eta_curve_blowup_3fold(*obj.astuple())
        report = {
            "command": "modelseq",
            "input": "curve_blowup_params",
            "eta_over_3": fmt(eta3),
            "closed_form_eta": fmt(3 * eta3),
        }
        seq = curve_blowup_sequence(*obj.astuple())
        seq_report = _sequence_report(seq, args)
        report.update(seq_report)
        report["closed_form_agrees"] = rat(seq_report["eta"]) == 3 * eta3
    if expected:
        report["checks"] = _checks(report, expected, lambda *a: None)
    return report


def cmd_okounkov(args) -> dict:
    _, body, expected = _load(args, ("okounkov_body",))
    if body.is_empty:
        raise InputError("Okounkov body is empty")
    if body.volume == 0:
        raise InputError("Okounkov body has zero volume")
    rep = okounkov_barycenter_verdict(body)
    report = {
        "command": "okounkov",
        "dim": body.dim,
        "volume": fmt(body.volume),
        "barycenter": jsonio.rat_list(rep.barycenter),
        "b1": fmt(rep.b1),
        "obstruction": rep.obstruction.value,
    }
    if args.moment is not None:
        w = args.moment
        if len(w) != body.dim:
            raise InputError(f"--moment needs {body.dim} components")
        report["moment"] = {"w": [fmt(c) for c in w], "value": fmt(moment(body, w))}
    if expected:
        report["checks"] = _checks(report, expected, lambda *a: None)
    return report


def cmd_weights(args) -> dict:
    _, X, _ = _load(args, ("fan",))
    ray = args.ray
    if not 0 <= ray < len(X.rays):
        raise InputError(f"ray index {ray} out of range for {len(X.rays)} rays")
    if args.r < 1:
        raise InputError("--r must be a positive integer")
    n = X.dim
    k0 = default_step(X, ray, args.r)
    series = weight_series(X, ray, args.r, kmax=args.kmax)
    escalated = False
    if not series.fitted:
        # one escalation: double the step, keeping the same number of samples
        escalated = True
        k0 *= 2
        series = weight_series(X, ray, args.r, ks=[k0 * i for i in range(1, len(series.ks) + 1)])
        if not series.fitted:
            raise FitMismatch(
                f"no polynomial of degree {n + 1} fits the samples at step {k0 // 2} or {k0}",
                suggested_k0=2 * k0,
            )
    Kn = factorial(n) * X.polytope.volume
    eta_w = eta_from_weights(series)
    eta_t = toric_eta(X, ray)
    return {
        "command": "weights",
        "name": X.name,
        "ray": ray,
        "ray_vector": list(X.rays[ray]),
        "r": args.r,
        "k0": k0,
        "escalated": escalated,
        "tau": fmt(series.tau),
        "ks": list(series.ks),
        "h0": list(series.h0_values),
        "f": list(series.f_values),
        "w": list(series.w_values),
        "fitted_f": jsonio.rat_list(series.fitted_f.coeffs),
        "fitted_w": jsonio.rat_list(series.fitted_w.coeffs),
        "kn": fmt(Kn),
        "eta_from_weights": fmt(eta_w),
        "df_from_weights": fmt(df_from_weights(series, n, Kn)),
        "df_from_eta": fmt(df_from_eta(eta_w, n, args.r, Kn)),
        "toric_eta": fmt(eta_t),
        "eta": fmt(eta_w),
        "comparison": "AGREE" if eta_w == eta_t else "DISAGREE",
    }


def cmd_catalog(args) -> dict:
    items = []
    for e in catalog.entries(args.kind):
        items.append({"id": e.id, "kind": e.kind, "expected": sorted(e.expected)})
    return {"command": "catalog", "directory": str(catalog.catalog_dir()), "entries": items}


# output

def _render(obj, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={_scalar(v)}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {_scalar(value)}")
    return lines


def _scalar(value) -> str:
    if isinstance(value, list):
        return "(" + ", ".join(_scalar(v) for v in value) + ")"
    if value is None:
        return "-"
    return str(value)


def _emit(obj, as_json: bool, stream) -> None:
    if as_json:
        stream.write(jsonio.dumps(obj))
    else:
        stream.write("\n".join(_render(obj)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="divstab", description="Exact divisorial stability checks for Fano varieties.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("path", nargs="?", help="JSON input file")
        p.add_argument("--catalog", metavar="ID", help="use a bundled catalog entry")
        p.add_argument("--json", action="store_true", help="force JSON output")

    p = sub.add_parser("toric", help="barycenter verdict and per-ray eta for a toric Fano")
    common(p)
    p.add_argument("--ray", type=int, help="ray index to report on")
    p.add_argument("--at", type=_rat_arg, help="evaluate vol(-K - xD) for --ray at this x")
    p.set_defaults(func=cmd_toric)

    p = sub.add_parser("modelseq", help="eta, xi and DF from an ample model sequence")
    common(p)
    p.add_argument("--r", type=int, help="multiple r of -K for the DF invariant")
    p.add_argument("--kn", type=_rat_arg, help="anticanonical degree (defaults to V(0))")
    p.set_defaults(func=cmd_modelseq)

    p = sub.add_parser("okounkov", help="barycenter obstruction for an Okounkov body")
    common(p)
    p.add_argument("--moment", type=lambda s: [_rat_arg(t) for t in s.split(",")], help="weight vector w, e.g. 0,1,0")
    p.set_defaults(func=cmd_okounkov)

    p = sub.add_parser("weights", help="eta and DF from lattice-point weight polynomials")
    common(p)
    p.add_argument("--ray", type=int, default=0)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--kmax", type=int, help="sample k up to this bound")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("catalog", help="list bundled catalog entries")
    p.add_argument("--kind", choices=catalog.KINDS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    as_json = args.json or not sys.stdout.isatty()
    try:
        report = args.func(args)
    except InvalidSequence as exc:
        err, code = {"error": "InvalidSequence", "message": "sequence failed validation",
                     "issues": [str(i) for i in exc.issues]}, EXIT_INPUT
    except InputError as exc:
        err, code = {"error": "InputError", "message": str(exc), "issues": exc.issues}, EXIT_INPUT
    except NotFano as exc:
        err, code = {"error": "NotFano", "message": str(exc)}, EXIT_NOT_FANO
    except FitMismatch as exc:
        err, code = {"error": "FitMismatch", "message": str(exc), "suggested_k0": exc.suggested_k0}, EXIT_FIT
    except ValueError as exc:
        err, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    else:
        _emit(report, as_json, sys.stdout)
        return EXIT_OK
    _emit(err, as_json, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""JSON documents: configuration input and report output.

Two input kinds exist.  ``curve_dual_graph``::

    {"kind": "curve_dual_graph", "residue_char": 0, "mode": "sncd",
     "components": [{"id": "C", "multiplicity": 6, "genus": 0, "self_intersection": -1}, ...],
     "intersections": [{"a": "A1", "b": "C", "count": 1}, ...]}

and ``stratified``::

    {"kind": "stratified", "residue_char": 3,
     "strata": [{"multiplicity": 2, "chi_open": -2}], "total_chi": -4}

Reports are rendered by ``to_document``; field order is fixed by the code.
"""

from __future__ import annotations

import json
from functools import singledispatch
from typing import Any

from .cyclotomic import CyclotomicProduct, IntegerPolynomial, expand, is_polynomial
from .errors import InvariantError, ParseError, TameZetaError
from .fiber import (
    MODES,
    Component,
    FiberConfiguration,
    Pairing,
    StratumData,
    ValidationReport,
    derive_self_intersections,
    validate,
)
from .points import DegreeSet
from .surgery import ContractionOutcome, MinimalityReport
from .tameness import DegreeReport, RootOrderCheck, SaitoReport, TamenessReport, UnipotenceCheck
from .trace import SaitoQuestionCheck, TraceReport
from .zeta import ZetaReport

CURVE = "curve_dual_graph"
STRATIFIED = "stratified"

_CURVE_KEYS = {"kind", "residue_char", "mode", "components", "intersections", "total_chi"}
_STRAT_KEYS = {"kind", "residue_char", "strata", "total_chi"}
_COMPONENT_KEYS = {"id", "multiplicity", "genus", "self_intersection"}
_INTERSECTION_KEYS = {"a", "b", "count"}
_STRATUM_KEYS = {"multiplicity", "chi_open"}


def _obj(value, path: str) -> dict:
    if not isinstance(value, dict):
        raise ParseError(f"expected an object, got {type(value).__name__}", path)
    return value


def _keys(obj: dict, allowed: set[str], required: set[str], path: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise ParseError(f"unknown field {unknown[0]!r}", f"{path}.{unknown[0]}" if path else unknown[0])
    missing = sorted(required - set(obj))
    if missing:
        raise ParseError(f"missing field {missing[0]!r}", f"{path}.{missing[0]}" if path else missing[0])


def _int(obj: dict, key: str, path: str, default=None) -> int:
    if key not in obj:
        return default
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"expected an integer, got {v!r}", f"{path}.{key}" if path else key)
    return v


def _list(obj: dict, key: str, path: str) -> list:
    v = obj.get(key, [])
    if not isinstance(v, list):
        raise ParseError("expected a list", f"{path}.{key}" if path else key)
    return v


def parse(text: str) -> FiberConfiguration | StratumData:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    return from_document(raw)


def from_document(raw: Any) -> FiberConfiguration | StratumData:
    doc = _obj(raw, "")
    kind = doc.get("kind")
    if kind == CURVE:
        return _parse_curve(doc)
    if kind == STRATIFIED:
        return _parse_strata(doc)
    raise ParseError(f"kind must be {CURVE!r} or {STRATIFIED!r}, got {kind!r}", "kind")


def _parse_curve(doc: dict) -> FiberConfiguration:
    _keys(doc, _CURVE_KEYS, {"kind", "residue_char", "components"}, "")
    mode = doc.get("mode", "sncd")
    if mode not in MODES:
        raise ParseError(f"mode must be one of {MODES}, got {mode!r}", "mode")
    comps = []
    for k, item in enumerate(_list(doc, "components", "")):
        path = f"components[{k}]"
        item = _obj(item, path)
        _keys(item, _COMPONENT_KEYS, {"id", "multiplicity"}, path)
        cid = item["id"]
        if not isinstance(cid, str):
            raise ParseError("component id must be a string", f"{path}.id")
        comps.append(
            Component(
                cid,
                _int(item, "multiplicity", path),
                _int(item, "genus", path, 0),
                _int(item, "self_intersection", path),
            )
        )
    pairs = []
    for k, item in enumerate(_list(doc, "intersections", "")):
        path = f"intersections[{k}]"
        item = _obj(item, path)
        _keys(item, _INTERSECTION_KEYS, {"a", "b"}, path)
        for end in ("a", "b"):
            if not isinstance(item[end], str):
                raise ParseError("endpoint must be a component id", f"{path}.{end}")
        pairs.append(Pairing(item["a"], item["b"], _int(item, "count", path, 1)))
    config = FiberConfiguration(
        tuple(comps), tuple(pairs), residue_char=_int(doc, "residue_char", ""), mode=mode
    )
    total_chi = _int(doc, "total_chi", "")
    if total_chi is not None:
        try:
            report = validate(derive_self_intersections(config))
        except TameZetaError:
            report = None
        if report is not None and report.ok and 2 - 2 * report.derived_genus != total_chi:
            raise InvariantError(
                "total_chi", f"document says {total_chi}, the fiber gives {2 - 2 * report.derived_genus}"
            )
    return config


def _parse_strata(doc: dict) -> StratumData:
    _keys(doc, _STRAT_KEYS, {"kind", "residue_char", "strata"}, "")
    strata = []
    for k, item in enumerate(_list(doc, "strata", "")):
        path = f"strata[{k}]"
        item = _obj(item, path)
        _keys(item, _STRATUM_KEYS, _STRATUM_KEYS, path)
        strata.append((_int(item, "multiplicity", path), _int(item, "chi_open", path)))
    return StratumData(tuple(strata), _int(doc, "residue_char", ""), _int(doc, "total_chi", ""))


def emit(obj: Any, indent: int | None = None) -> str:
    return json.dumps(to_document(obj), indent=indent, ensure_ascii=False)


@singledispatch
def to_document(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_document(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_document(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@to_document.register
def _(cfg: FiberConfiguration) -> dict:
    comps = []
    for c in cfg.components:
        item = {"id": c.id, "multiplicity": c.multiplicity, "genus": c.genus}
        if c.self_intersection is not None:
            item["self_intersection"] = c.self_intersection
        comps.append(item)
    return {
        "kind": CURVE,
        "residue_char": cfg.residue_char,
        "mode": cfg.mode,
        "components": comps,
        "intersections": [{"a": q.a, "b": q.b, "count": q.count} for q in cfg.pairings],
    }


@to_document.register
def _(s: StratumData) -> dict:
    doc = {
        "kind": STRATIFIED,
        "residue_char": s.residue_char,
        "strata": [{"multiplicity": n, "chi_open": chi} for n, chi in s.strata],
    }
    if s.total_chi is not None:
        doc["total_chi"] = s.total_chi
    return doc


@to_document.register
def _(cp: CyclotomicProduct) -> dict:
    doc: dict[str, Any] = {"cyclotomic": {str(d): e for d, e in cp.items()}}
    if is_polynomial(cp):
        doc["coefficients"] = list(expand(cp).coefficients)
    return doc


@to_document.register
def _(poly: IntegerPolynomial) -> dict:
    return {"coefficients": list(poly.coefficients)}


@to_document.register
def _(r: ZetaReport) -> dict:
    doc = {"zeta": to_document(r.zeta), "tame_euler_char": r.tame_euler_char}
    if r.factored is not None:
        for key in ("char_poly_h1", "q_poly", "quotient_q_over_p"):
            doc[key] = to_document(r.factored[key])
    return doc


@to_document.register
def _(r: ValidationReport) -> dict:
    return {
        "ok": r.ok,
        "derived_genus": r.derived_genus,
        "nu": dict(r.nu),
        "violations": [
            {"identity": v.identity, "component": v.component, "detail": v.detail} for v in r.violations
        ],
    }


@to_document.register
def _(r: TamenessReport) -> dict:
    return {
        "tame": r.tame_numeric,
        "sum_N_chi": r.sum_N_chi,
        "sum_Nprime_chi": r.sum_Nprime_chi,
        "p_tame": r.p_tame,
        "d_tame": {str(d): v for d, v in sorted(r.d_tame_witnesses.items())},
        "applicability_notes": list(r.applicability_notes),
    }


@to_document.register
def _(r: SaitoReport) -> dict:
    return {
        "tame": r.tame,
        "p_tame": r.p_tame,
        "pseudo_wild": r.pseudo_wild,
        "jacobian_type": None if r.jacobian_type_used is None else str(r.jacobian_type_used),
        "consistent": r.consistent,
    }


@to_document.register
def _(r: DegreeReport) -> dict:
    return {
        "semistable_reduction_degree": r.degree,
        "variants": {
            "principal_lcm": r.principal_lcm,
            "nonzero_chi_lcm": r.nonzero_chi_lcm,
            "negative_chi_lcm": r.negative_chi_lcm,
            "not_d_tame_lcm": r.not_d_tame_lcm,
        },
    }


@to_document.register
def _(r: DegreeSet) -> dict:
    return {"bound": r.bound, "members": list(r.members)}


@to_document.register
def _(r: TraceReport) -> dict:
    return {
        "trace": r.lefschetz_trace,
        "s": r.rational_volume,
        "epsilon": r.error_term,
        "holds": r.holds,
        "wild_indices": list(r.wild_index_set),
    }


@to_document.register
def _(r: SaitoQuestionCheck) -> dict:
    return {"applicable": r.applicable, "vanishes": r.vanishes, "proven": r.proven}


@to_document.register
def _(r: ContractionOutcome) -> dict:
    return {"class": r.cls.value, "usable": r.usable, "config": to_document(r.config)}


@to_document.register
def _(r: MinimalityReport) -> dict:
    return {"minimal": r.minimal, "witnesses": list(r.witnesses)}


@to_document.register
def _(r: RootOrderCheck) -> dict:
    return {
        "q_root_order_free": r.q_root_order_free,
        "d_tame": r.d_tame,
        "equivalent": r.equivalent,
        "genus_one_escape": r.genus_one_escape,
    }


@to_document.register
def _(r: UnipotenceCheck) -> dict:
    return {"h1_unipotent": r.h1_unipotent, "tame": r.tame}


def render_pretty(doc: Any, indent: int = 0) -> str:
    """Indented key/value text; coefficient lists are also shown as polynomials."""
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for key, value in doc.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.append(render_pretty(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value)}")
            if key == "coefficients":
                lines.append(f"{pad}polynomial: {IntegerPolynomial(value)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        if all(not isinstance(v, (dict, list)) for v in doc):
            return f"{pad}{json.dumps(doc)}"
        return "\n".join(f"{pad}-\n{render_pretty(v, indent + 1)}" for v in doc)
    return f"{pad}{json.dumps(doc)}"

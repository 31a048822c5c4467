"""Command-line interface.

Every analysis command reads a configuration document from a file argument
(or standard input when the argument is omitted or ``-``) and writes a JSON
report to standard output.  Exit codes: 0 success, 1 domain error, 2 bad
input or usage, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from . import surgery, tameness
from .document import CURVE, parse, render_pretty, to_document
from .errors import DocumentError, DomainError, InternalInconsistency, ParseError
from .fiber import NCD, SNCD, FiberConfiguration, StratumData, as_strata, derive_self_intersections, validate
from .kodaira import KodairaType, kodaira_config
from .points import has_rational_point, has_tame_point, point_degrees
from .trace import saito_question_check, trace_report
from .zeta import tame_euler_consistent, zeta_report


class _ValidationFailed(DomainError):
    def __init__(self, report_doc):
        self.report_doc = report_doc
        super().__init__("configuration does not validate")


def _read(path: str | None) -> FiberConfiguration | StratumData:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _curve(args) -> FiberConfiguration:
    data = _read(args.document)
    if not isinstance(data, FiberConfiguration):
        raise ParseError(f"command {args.command!r} needs a {CURVE} document", "kind")
    return derive_self_intersections(data)


def _any(args) -> FiberConfiguration | StratumData:
    data = _read(args.document)
    if isinstance(data, FiberConfiguration):
        return derive_self_intersections(data)
    return data


def cmd_validate(args) -> Any:
    data = _read(args.document)
    if not isinstance(data, FiberConfiguration):
        raise ParseError("validate needs a curve_dual_graph document", "kind")
    report = validate(derive_self_intersections(data))
    if not report.ok:
        raise _ValidationFailed(to_document(report))
    return report


def cmd_zeta(args) -> Any:
    return zeta_report(_any(args))


def cmd_charpoly(args) -> Any:
    doc = to_document(zeta_report(_curve(args)))
    return {k: doc[k] for k in ("char_poly_h1", "q_poly", "quotient_q_over_p")}


def cmd_tame(args) -> Any:
    data = _any(args)
    if isinstance(data, StratumData):
        return {"tame_euler_consistent": tame_euler_consistent(data)}
    return tameness.is_cohomologically_tame(data, ds=args.d or ())


def cmd_saito(args) -> Any:
    jac = KodairaType.parse(args.jacobian) if args.jacobian else None
    return tameness.saito_criterion(_curve(args), jac)


def cmd_degree(args) -> Any:
    return tameness.semistable_reduction_report(_curve(args))


def cmd_points(args) -> Any:
    cfg = _curve(args)
    doc = to_document(point_degrees(cfg, args.bound))
    doc["has_rational_point"] = has_rational_point(cfg)
    doc["has_tame_point"] = has_tame_point(cfg)
    return doc


def cmd_trace(args) -> Any:
    data = _any(args)
    strata = as_strata(data) if isinstance(data, FiberConfiguration) else data
    doc = to_document(trace_report(strata))
    doc["saito_question"] = to_document(saito_question_check(data))
    return doc


def cmd_blowup(args) -> Any:
    cfg = _curve(args)
    if args.interior:
        site = surgery.Interior(args.interior)
    elif args.intersection:
        parts = args.intersection.split(",")
        if len(parts) != 2:
            raise ParseError("--intersection takes ID,ID", "--intersection")
        site = surgery.Intersection(parts[0].strip(), parts[1].strip())
    else:
        site = surgery.Node(args.node)
    return surgery.blow_up(cfg, site)


def cmd_contract(args) -> Any:
    return surgery.contract(_curve(args), args.component)


def cmd_resolve(args) -> Any:
    return surgery.resolve_to_sncd(_curve(args))


def cmd_minimal(args) -> Any:
    return surgery.is_relatively_minimal(_curve(args), args.cls)


def cmd_kodaira(args) -> Any:
    return kodaira_config(KodairaType.parse(args.type, args.n), args.residue_char)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamezeta",
        description="Tame monodromy invariants of sncd-models of curves from their dual graphs.",
    )
    parser.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, document=True):
        p = sub.add_parser(name, help=help_text)
        if document:
            p.add_argument("document", nargs="?", help="JSON document (default: stdin)")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the intersection identities")
    add("zeta", cmd_zeta, "tame monodromy zeta function")
    add("charpoly", cmd_charpoly, "characteristic polynomial on H^1 and Q_C")
    p = add("tame", cmd_tame, "cohomological tameness and d-tameness")
    p.add_argument("--d", type=int, action="append", help="also test d-tameness (repeatable)")
    p = add("saito", cmd_saito, "Saito's criterion")
    p.add_argument("--jacobian", help="Kodaira type of the Jacobian, e.g. I0, IV*")
    add("degree", cmd_degree, "degree of the minimal extension giving semistable reduction")
    p = add("points", cmd_points, "degrees of tame extensions with rational points")
    p.add_argument("--bound", type=int, required=True)
    add("trace", cmd_trace, "trace formula error term")
    p = add("blowup", cmd_blowup, "blow up a point of the special fiber")
    site = p.add_mutually_exclusive_group(required=True)
    site.add_argument("--interior", metavar="ID")
    site.add_argument("--intersection", metavar="ID,ID")
    site.add_argument("--node", metavar="ID")
    p = add("contract", cmd_contract, "contract a (-1)-curve")
    p.add_argument("--component", required=True, metavar="ID")
    add("resolve", cmd_resolve, "blow up all nodes")
    p = add("minimal", cmd_minimal, "relative minimality")
    p.add_argument("--class", dest="cls", choices=[SNCD, NCD], default=SNCD)
    p = add("kodaira", cmd_kodaira, "emit a built-in Kodaira fiber", document=False)
    p.add_argument("type", help="I, II, III, IV, I*, IV*, III*, II* (or I3, I2* ...)")
    p.add_argument("--n", type=int)
    p.add_argument("--residue-char", type=int, default=0)
    return parser


def _write(doc: Any, pretty: bool) -> None:
    if pretty:
        print(render_pretty(doc))
    else:
        print(json.dumps(doc, ensure_ascii=False))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except _ValidationFailed as exc:
        _write(exc.report_doc, args.pretty)
        return 1
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    _write(to_document(result), args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())

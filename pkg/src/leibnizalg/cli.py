"""Command line front end.

Subcommands: check, analyze, decompose, a-algebra, battery, cyclic,
frattini, enumerate, corpus.  Reports are deterministic: the same
argument vector, seed and input bytes produce byte-identical output
(JSON output uses sorted keys and no timestamps).

Exit codes: 0 success (including a negative A-algebra verdict), 1 a
checked mathematical property failed (non-Leibniz table, battery hard
failure, classification cross-check failure), 2 the request is
unsupported (infinite-field enumeration, factorization beyond the
implemented range, budget exceeded), 3 bad input (unparseable file or
arguments).
"""

from __future__ import annotations

import argparse
import json
import sys

from .aalgebra import is_a_algebra, theorem_battery
from .algfile import input_digest, load_algebra_path
from .corpus import corpus
from .cyclic import classify_cyclic
from .decompose import structure_report
from .enumeration import (DEFAULT_BUDGET, enumerate_spaces, frattini_ideal,
                          maximal_subalgebras, socle_analysis, total_subspaces)
from .errors import (BadSpec, BudgetExceeded, CartanSearchFailed,
                     DecompositionFailed, FieldParseError,
                     InfiniteFieldUnsupported, LeibnizError, NoSolution,
                     NotDecomposing, NotLeibniz, ParseError,
                     UnsupportedFactorization)
from .fields import field_to_doc, parse_field_name
from .poly import format_poly
from .series import (derived_length, derived_series, hypercentre,
                     is_completely_solvable, is_metabelian, is_nilpotent,
                     is_solvable, lower_central_series, lower_nilpotent_series,
                     nilpotency_class, nilradical, radical,
                     upper_central_series)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_UNSUPPORTED = 2
EXIT_INPUT = 3


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _space_doc(L, U):
    return {
        "dim": U.dim,
        "basis": [[L.field.serialize_scalar(c) for c in row] for row in U.basis],
    }


def _clause_doc(c):
    return {"clause": c.clause, "applicable": c.applicable,
            "holds": c.holds, "detail": c.detail}


def _verdict_doc(L, v):
    return {
        "verdict": v.label,
        "certificate": v.certificate,
        "witness": _space_doc(L, v.witness) if v.witness is not None else None,
        "reasons": list(v.reasons),
    }


def _load(path):
    L = load_algebra_path(path)
    with open(path, "r", encoding="utf-8") as fh:
        digest = input_digest(fh.read())
    return L, digest


def _base_doc(command, args, L=None, digest=None):
    doc = {"command": command, "seed": args.seed, "budget": args.budget}
    if L is not None:
        doc["field"] = str(L.field)
        doc["dim"] = L.dim
    if digest is not None:
        doc["input_sha256"] = digest
    return doc


def _cmd_check(args):
    L, digest = _load(args.input)
    doc = _base_doc("check", args, L, digest)
    violation = L.leibniz_violation()
    if violation is None:
        doc["leibniz"] = True
        return doc, EXIT_OK
    F = L.field
    doc["leibniz"] = False
    doc["violation"] = {
        "triple": list(violation.triple),
        "lhs": [F.serialize_scalar(c) for c in violation.lhs],
        "rhs": [F.serialize_scalar(c) for c in violation.rhs],
    }
    return doc, EXIT_MATH


def _series_dims(report):
    return [t.dim for t in report.terms]


def _cmd_analyze(args):
    L, digest = _load(args.input)
    L.require_leibniz()
    doc = _base_doc("analyze", args, L, digest)
    doc["leibniz"] = True
    doc["predicates"] = {
        "abelian": L.is_abelian(),
        "nilpotent": is_nilpotent(L),
        "solvable": is_solvable(L),
        "completely_solvable": is_completely_solvable(L),
        "metabelian": is_metabelian(L),
    }
    doc["series"] = {
        "derived": _series_dims(derived_series(L)),
        "lower_central": _series_dims(lower_central_series(L)),
        "lower_nilpotent": _series_dims(lower_nilpotent_series(L)),
        "upper_central": _series_dims(upper_central_series(L)),
    }
    doc["dims"] = {
        "derived": L.derived_space().dim,
        "squares_ideal": L.leib_ideal().dim,
        "centre": L.centre().dim,
        "hypercentre": hypercentre(L).dim,
    }
    doc["nilpotency_class"] = nilpotency_class(L) if is_nilpotent(L) else None
    doc["derived_length"] = derived_length(L) if is_solvable(L) else None
    try:
        N, mode = nilradical(L, args.budget)
        doc["nilradical"] = {"dim": N.dim, "mode": mode}
    except (InfiniteFieldUnsupported, BudgetExceeded) as exc:
        doc["nilradical"] = {"error": str(exc)}
    try:
        R, mode = radical(L, args.budget)
        doc["radical"] = {"dim": R.dim, "mode": mode}
    except (InfiniteFieldUnsupported, BudgetExceeded) as exc:
        doc["radical"] = {"error": str(exc)}
    return doc, EXIT_OK


def _cmd_decompose(args):
    L, digest = _load(args.input)
    L.require_leibniz()
    report = structure_report(L, seed=args.seed, budget=args.budget)
    doc = _base_doc("decompose", args, L, digest)
    doc["predicates"] = dict(report.predicates)
    if report.decomposition is not None:
        doc["decomposition"] = {
            "parts": [_space_doc(L, P) for P in report.decomposition.parts],
            "part_dims": [P.dim for P in report.decomposition.parts],
        }
    else:
        doc["decomposition"] = None
    doc["decomposition_error"] = report.decomposition_error
    doc["nilradical"] = {"dim": report.nilradical.dim,
                         "mode": report.nilradical_mode}
    doc["clauses"] = [_clause_doc(c) for c in report.clauses]
    return doc, EXIT_OK


def _cmd_a_algebra(args):
    L, digest = _load(args.input)
    L.require_leibniz()
    verdict = is_a_algebra(L, args.budget, args.seed)
    doc = _base_doc("a-algebra", args, L, digest)
    doc.update(_verdict_doc(L, verdict))
    return doc, EXIT_OK


def _cmd_battery(args):
    L, digest = _load(args.input)
    report = theorem_battery(L, seed=args.seed, budget=args.budget)
    doc = _base_doc("battery", args, L, digest)
    doc.update(_verdict_doc(L, report.verdict))
    doc["clauses"] = [_clause_doc(c) for c in report.clauses]
    doc["findings"] = list(report.findings)
    doc["hard_failures"] = list(report.hard_failures)
    applicable = [c for c in report.clauses if c.applicable]
    doc["counts"] = {
        "clauses": len(report.clauses),
        "applicable": len(applicable),
        "holds": sum(1 for c in applicable if c.holds),
        "failed": sum(1 for c in applicable if c.holds is False),
    }
    return doc, EXIT_MATH if report.hard_failures else EXIT_OK


def _parse_alpha(F, token):
    try:
        value = int(token)
    except ValueError:
        value = token
    return F.parse_scalar(value)


def _cmd_cyclic(args):
    F = parse_field_name(args.field)
    alphas = [_parse_alpha(F, tok) for tok in args.alphas]
    report = classify_cyclic(F, alphas, budget=args.budget, seed=args.seed)
    doc = _base_doc("cyclic", args, report.algebra)
    doc["alphas"] = [F.serialize_scalar(a) for a in report.spec.alphas]
    doc["polynomial"] = format_poly(report.polynomial)
    doc["cofactor"] = format_poly(report.cofactor)
    doc["cofactor_factors"] = [{"poly": format_poly(f), "multiplicity": m}
                               for f, m in report.factors]
    doc["is_a"] = report.is_a
    doc["nilpotent"] = report.nilpotent
    doc["monolithic_claim"] = report.monolithic_claim
    doc["frattini_free_claim"] = report.frattini_free_claim
    doc["complement"] = [F.serialize_scalar(c) for c in report.complement]
    doc["normalization_scalar"] = (
        F.serialize_scalar(report.normalization_scalar)
        if report.normalization_scalar is not None else None)
    doc["checks"] = [_clause_doc(c) for c in report.checks]
    doc["ok"] = report.ok
    return doc, EXIT_OK if report.ok else EXIT_MATH


def _cmd_frattini(args):
    L, digest = _load(args.input)
    L.require_leibniz()
    phi = frattini_ideal(L, args.budget)
    soc = socle_analysis(L, args.budget)
    doc = _base_doc("frattini", args, L, digest)
    doc["frattini"] = _space_doc(L, phi)
    doc["maximal_subalgebra_count"] = len(maximal_subalgebras(L, args.budget))
    doc["socle"] = {
        "minimal_ideal_dims": [I.dim for I in soc.minimal_ideals],
        "abelian_socle_dim": soc.asoc.dim,
        "monolithic": soc.monolithic,
        "monolith_dim": soc.monolith.dim if soc.monolith is not None else None,
    }
    return doc, EXIT_OK


def _cmd_enumerate(args):
    L, digest = _load(args.input)
    L.require_leibniz()
    spaces = enumerate_spaces(L, args.kind, args.budget)
    doc = _base_doc("enumerate", args, L, digest)
    doc["kind"] = args.kind
    doc["subspace_universe"] = total_subspaces(L.dim, L.field.size)
    doc["total"] = len(spaces)
    by_dim = {}
    for U in spaces:
        by_dim[str(U.dim)] = by_dim.get(str(U.dim), 0) + 1
    doc["by_dimension"] = by_dim
    if args.list:
        doc["bases"] = [_space_doc(L, U)["basis"] for U in spaces]
    return doc, EXIT_OK


def _cmd_corpus(args):
    members = corpus()
    if args.limit is not None:
        members = members[:args.limit]
    doc = _base_doc("corpus", args)
    doc["size"] = len(members)
    rows = []
    exit_code = EXIT_OK
    failed_members = []
    unknown = 0
    for m in members:
        row = {"label": m.label, "kind": m.kind,
               "field": str(m.algebra.field), "dim": m.algebra.dim}
        if args.battery:
            report = theorem_battery(m.algebra, seed=args.seed,
                                     budget=args.budget)
            row["verdict"] = report.verdict.label
            row["hard_failures"] = list(report.hard_failures)
            row["findings"] = list(report.findings)
            if report.verdict.is_unknown:
                unknown += 1
            if report.hard_failures:
                failed_members.append(m.label)
        rows.append(row)
    doc["members"] = rows
    if args.battery:
        doc["battery"] = {
            "failed_members": failed_members,
            "unknown_verdicts": unknown,
        }
        if failed_members:
            exit_code = EXIT_MATH
    return doc, exit_code


def _render_text(value, key=None, indent=0):
    pad = "  " * indent
    label = f"{key}: " if key is not None else ""
    lines = []
    if isinstance(value, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
            indent += 1
        for k, v in value.items():
            lines.extend(_render_text(v, k, indent))
    elif isinstance(value, list):
        if all(not isinstance(v, (dict, list)) for v in value):
            lines.append(f"{pad}{label}[{', '.join(str(v) for v in value)}]")
        else:
            lines.append(f"{pad}{key}:" if key is not None else f"{pad}-")
            for i, v in enumerate(value):
                lines.extend(_render_text(v, f"[{i}]", indent + 1))
    else:
        lines.append(f"{pad}{label}{value}")
    return lines


def render(doc, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return "\n".join(_render_text(doc)) + "\n"


_COMMANDS = {
    "check": _cmd_check,
    "analyze": _cmd_analyze,
    "decompose": _cmd_decompose,
    "a-algebra": _cmd_a_algebra,
    "battery": _cmd_battery,
    "cyclic": _cmd_cyclic,
    "frattini": _cmd_frattini,
    "enumerate": _cmd_enumerate,
    "corpus": _cmd_corpus,
}


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--output", default=None,
                        help="write the report to this path instead of stdout")
    parser = _Parser(prog="leibnizalg",
                     description="exact analysis of finite-dimensional "
                                 "Leibniz algebras from structure constants")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "analyze", "decompose", "a-algebra", "battery",
                 "frattini"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", help="algebra file (JSON)")
    p = sub.add_parser("cyclic", parents=[common])
    p.add_argument("--field", required=True,
                   help="ground field, e.g. q, gf2, gf(3,2)")
    p.add_argument("alphas", nargs="+",
                   help="alpha_2 ... alpha_n as field literals")
    p = sub.add_parser("enumerate", parents=[common])
    p.add_argument("input", help="algebra file (JSON)")
    p.add_argument("--kind", choices=("subspaces", "subalgebras", "ideals"),
                   default="subalgebras")
    p.add_argument("--list", action="store_true",
                   help="include every echelon basis in the report")
    p = sub.add_parser("corpus", parents=[common])
    p.add_argument("--battery", action="store_true",
                   help="run the theorem battery over every member")
    p.add_argument("--limit", type=int, default=None)
    return parser


def run_command(argv):
    """Parse argv and run the subcommand; returns (report dict, exit code)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        return {"error": {"type": "argument", "message": str(exc)}}, EXIT_INPUT
    try:
        return _COMMANDS[args.command](args)
    except NotLeibniz as exc:
        v = getattr(exc, "violation", None)
        doc = {"error": {"type": "not_leibniz", "message": str(exc),
                         "triple": list(v.triple) if v else None}}
        return doc, EXIT_MATH
    except (InfiniteFieldUnsupported, UnsupportedFactorization,
            BudgetExceeded, CartanSearchFailed, DecompositionFailed,
            NotDecomposing, NoSolution) as exc:
        return ({"error": {"type": type(exc).__name__, "message": str(exc)}},
                EXIT_UNSUPPORTED)
    except (ParseError, FieldParseError, BadSpec) as exc:
        where = getattr(exc, "where", None)
        doc = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        if where:
            doc["error"]["where"] = where
        return doc, EXIT_INPUT
    except FileNotFoundError as exc:
        return ({"error": {"type": "missing_file", "message": str(exc)}},
                EXIT_INPUT)
    except LeibnizError as exc:
        return ({"error": {"type": type(exc).__name__, "message": str(exc)}},
                EXIT_UNSUPPORTED)


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    doc, code = run_command(argv)
    out_path = None
    fmt_choice = "text"
    for i, tok in enumerate(argv):
        if tok == "--format" and i + 1 < len(argv):
            fmt_choice = argv[i + 1]
        elif tok.startswith("--format="):
            fmt_choice = tok.split("=", 1)[1]
        elif tok == "--output" and i + 1 < len(argv):
            out_path = argv[i + 1]
        elif tok.startswith("--output="):
            out_path = tok.split("=", 1)[1]
    text = render(doc, fmt_choice)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

JSON on stdout by default (--pretty for plain text).  Exit codes: 0 on
success, 1 when a certification comes out NOT_NONNEGATIVE (so pipelines
can gate on positivity), 2 on usage or parse errors.  Output is
byte-deterministic: every ordering is fixed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .legendrian import (
    LEGENDRIAN_RANK,
    LEGENDRIAN_TABLE,
    lagrangian_part,
    legendrian_parse,
    legendrian_positivity,
)
from .parsing import ParseError, evaluate_text, parse_partition_arg
from .polynomial import FAMILY_C, truncate_family
from .positivity import (
    CLASSICAL_THOM_TABLE,
    VERDICT_NOT_NONNEGATIVE,
    certify,
    minimal_hook_rank,
    schur_bundle_class,
    verify_thom_table,
)
from .qtilde import qtilde
from .rings import GrassmannianRing, LagrangianRing
from .schur import lr_multiply, to_schur

# Audit registry: which engine operation each subcommand is the unique
# front end for; checked by the test suite.
SUBCOMMAND_OPERATIONS = {
    "to-schur": ("to_schur",),
    "certify": ("certify",),
    "lr": ("lr_multiply",),
    "qtilde": ("qtilde",),
    "gr": ("gr_reduce", "gr_integrate", "rectangle_dual", "gr_pairing"),
    "lg": ("lg_reduce", "lg_integrate", "strict_complement", "lg_restrict",
           "lg_pairing", "qtilde_expand"),
    "thom-verify": ("verify_thom_table", "legendrian_parse", "lagrangian_part",
                    "legendrian_positivity"),
    "schur-bundle": ("schur_bundle_class",),
}


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="schurcalc",
        description="Exact Schur/Q-tilde calculus with positivity certification",
    )
    top.add_argument("--pretty", action="store_true",
                     help="plain-text output instead of JSON")
    top.add_argument("--input", metavar="FILE",
                     help="read the expression argument from FILE")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("to-schur", help="expand an expression in the Schur basis")
    p.add_argument("expr", nargs="?")
    p.add_argument("--length-bound", type=int, default=None)

    p = sub.add_parser("certify", help="Schur-positivity certificate")
    p.add_argument("expr", nargs="?")
    p.add_argument("--length-bound", type=int, default=None)

    p = sub.add_parser("lr", help="Littlewood-Richardson product s_lam * s_mu")
    p.add_argument("lam")
    p.add_argument("mu")

    p = sub.add_parser("qtilde", help="Q-tilde polynomial of a partition")
    p.add_argument("mu")

    p = sub.add_parser("gr", help="Grassmannian cohomology ring operations")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("action", choices=["reduce", "integrate", "dual", "pairing"])
    p.add_argument("arg", nargs="?")

    p = sub.add_parser("lg", help="Lagrangian Grassmannian ring operations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("action",
                   choices=["reduce", "integrate", "dual", "restrict", "pairing"])
    p.add_argument("arg", nargs="?")

    p = sub.add_parser("thom-verify", help="verify a built-in positivity table")
    p.add_argument("--table", choices=["classical", "lagrangian", "legendrian"],
                   required=True)

    p = sub.add_parser("schur-bundle",
                       help="Schur class of a Schur bundle in the Schur basis")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--functor", required=True, metavar="LAMBDA")
    p.add_argument("--class", dest="class_", required=True, metavar="MU")

    return top


def _expression_text(args, value: str | None) -> str:
    if value is not None:
        return value
    if args.input:
        with open(args.input, "r", encoding="utf-8") as handle:
            return handle.read().strip()
    raise ValueError("an expression is required (positional or via --input)")


def _emit(payload, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(_render(payload, 0) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _render(value, depth: int) -> str:
    pad = "  " * depth
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render(v, depth + 1))
            else:
                lines.append(f"{pad}{k}: {_render_scalar(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)) and item:
                body = _render(item, depth + 1)
                lines.append(f"{pad}-\n{body}")
            else:
                lines.append(f"{pad}- {_render_scalar(item)}")
        return "\n".join(lines)
    return f"{pad}{_render_scalar(value)}"


def _render_scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, dict):
        return "{}"
    if isinstance(value, list):
        return "[]"
    return str(value)


def _expansion_payload(expansion) -> dict:
    return {"degree": expansion.degree, "expansion": expansion.to_json()}


def _pairing_payload(ring, label: str) -> dict:
    degrees = []
    ok_all = True
    for d in range(ring.top_degree + 1):
        rows, cols, matrix = ring.pairing_matrix(d)
        ok = all(
            matrix[i][j] == (1 if cols[j] == ring.dual(rows[i]) else 0)
            for i in range(len(rows)) for j in range(len(cols))
        )
        ok_all = ok_all and ok
        degrees.append({
            "degree": d,
            "rows": [list(p.parts) for p in rows],
            "cols": [list(p.parts) for p in cols],
            "matrix": matrix,
            "is_dual_permutation": ok,
        })
    return {"ring": label, "degrees": degrees, "is_dual_permutation": ok_all}


def _run_command(args) -> int:
    pretty = args.pretty

    if args.command == "to-schur":
        poly = evaluate_text(_expression_text(args, args.expr))
        expansion = to_schur(poly, length_bound=args.length_bound)
        _emit(_expansion_payload(expansion), pretty)
        return 0

    if args.command == "certify":
        poly = evaluate_text(_expression_text(args, args.expr))
        report = certify(poly, length_bound=args.length_bound)
        _emit(report.to_json(), pretty)
        return 1 if report.verdict == VERDICT_NOT_NONNEGATIVE else 0

    if args.command == "lr":
        lam = parse_partition_arg(args.lam)
        mu = parse_partition_arg(args.mu)
        _emit(_expansion_payload(lr_multiply(lam, mu)), pretty)
        return 0

    if args.command == "qtilde":
        mu = parse_partition_arg(args.mu)
        poly = qtilde(mu)
        _emit({"partition": list(mu.parts), "degree": mu.weight,
               "polynomial": str(poly)}, pretty)
        return 0

    if args.command == "gr":
        ring = GrassmannianRing(args.r, args.n)
        label = f"Gr({args.r},{args.n})"
        if args.action == "pairing":
            _emit(_pairing_payload(ring, label), pretty)
            return 0
        if args.action == "dual":
            lam = parse_partition_arg(args.arg or "")
            _emit({"partition": list(ring.dual(lam).parts)}, pretty)
            return 0
        poly = evaluate_text(_expression_text(args, args.arg))
        # on the ring the generators are Chern classes of a rank-r bundle
        poly = truncate_family(poly, FAMILY_C, ring.r)
        expansion = ring.reduce(poly)
        if args.action == "reduce":
            payload = {"ring": label}
            payload.update(_expansion_payload(expansion))
            _emit(payload, pretty)
            return 0
        _emit({"ring": label, "value": str(ring.integrate(expansion))}, pretty)
        return 0

    if args.command == "lg":
        ring = LagrangianRing(args.n)
        label = f"LG({args.n})"
        if args.action == "pairing":
            _emit(_pairing_payload(ring, label), pretty)
            return 0
        if args.action == "dual":
            mu = parse_partition_arg(args.arg or "", strict=True)
            _emit({"strict_partition": list(ring.dual(mu).parts)}, pretty)
            return 0
        if args.action == "restrict":
            lam = parse_partition_arg(args.arg or "")
            payload = {"ring": label}
            payload.update(_expansion_payload(ring.restrict(lam)))
            _emit(payload, pretty)
            return 0
        poly = evaluate_text(_expression_text(args, args.arg))
        poly = truncate_family(poly, FAMILY_C, ring.n)
        expansion = ring.reduce(poly)
        if args.action == "reduce":
            payload = {"ring": label}
            payload.update(_expansion_payload(expansion))
            _emit(payload, pretty)
            return 0
        _emit({"ring": label, "value": str(ring.integrate(expansion))}, pretty)
        return 0

    if args.command == "thom-verify":
        return _thom_verify(args.table, pretty)

    if args.command == "schur-bundle":
        lam = parse_partition_arg(args.functor)
        mu = parse_partition_arg(args.class_)
        expansion = schur_bundle_class(lam, mu, args.rank)
        _emit(_expansion_payload(expansion), pretty)
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def _thom_verify(table: str, pretty: bool) -> int:
    if table == "classical":
        reports = verify_thom_table()
        entries = []
        for entry, report in zip(CLASSICAL_THOM_TABLE, reports):
            data = report.to_json()
            data["expression"] = entry.expression
            data["codimension"] = entry.codimension
            data["coefficient_sum"] = str(report.expansion.coefficient_sum())
            data["hook_rank"] = minimal_hook_rank(report.expansion)
            entries.append(data)
        ok = all(r.positive for r in reports)
        _emit({"table": "classical", "entries": entries, "all_nonnegative": ok},
              pretty)
        return 0 if ok else 1

    if table == "lagrangian":
        entries = []
        ok = True
        for entry in LEGENDRIAN_TABLE:
            parsed = legendrian_parse(entry.expression, LEGENDRIAN_RANK)
            part = lagrangian_part(parsed)
            nonneg = part.is_nonnegative()
            ok = ok and nonneg
            entries.append({
                "name": entry.name,
                "verdict": "NONNEGATIVE" if nonneg else "NOT_NONNEGATIVE",
                "expansion": part.to_json(),
                "bold_expression": entry.lagrangian_expression,
            })
        _emit({"table": "lagrangian", "entries": entries, "all_nonnegative": ok},
              pretty)
        return 0 if ok else 1

    entries = []
    ok = True
    for entry in LEGENDRIAN_TABLE:
        parsed = legendrian_parse(entry.expression, LEGENDRIAN_RANK)
        report = legendrian_positivity(parsed, name=entry.name)
        ok = ok and report.nonnegative
        data = report.to_json()
        data["codimension"] = entry.codimension
        data["degree"] = parsed.degree
        entries.append(data)
    _emit({"table": "legendrian", "entries": entries, "all_nonnegative": ok},
          pretty)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run_command(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

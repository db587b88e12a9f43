"""Command-line surface: exact lattice data in text, JSON, CSV, and SVG form.

Every subcommand shares the global flags --n (required, n >= 3), --format,
--output, and --precision.  Exit codes: 0 on success, 1 on a domain error
(a class outside the movable cone, an unwritable path), 2 on a usage error.
CSV output exists for the two tabular commands (degree --estimate, orbit);
the other commands emit text or JSON.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence

from . import serialize as ser
from .chambers import chamber_walls, render_chamber_svg
from .cones import movable_membership, nef_membership, reduce_to_nef
from .divisors import DivisorClass
from .dynamics import degree_estimators, dyn_degree_exact, ray_convergence
from .intersection import FamilyContext
from .lattice import family_map, involution_matrix
from .primitivity import ALL_FIXED, primitivity_report


class _UsageError(Exception):
    pass


def _merge_pair_flags(argv: list[str], names: tuple[str, ...] = ("--class", "--ample")) -> list[str]:
    # "--class -7,41" confuses argparse ("-7,41" looks like a flag); fold the
    # value into the same token before parsing
    merged: list[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in names and i + 1 < len(argv):
            merged.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            merged.append(token)
    return merged


def _parse_class(text: str) -> DivisorClass:
    try:
        return ser.class_from_str(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"invalid class {text!r}: {exc}") from exc


def _require_format(args, allowed: tuple[str, ...], hint: str) -> None:
    if args.format not in allowed:
        raise _UsageError(f"format {args.format!r} is not available here; {hint}")


def _table_text(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


# -- subcommand handlers -----------------------------------------------------

def _cmd_matrices(ctx: FamilyContext, args) -> str:
    _require_format(args, ("text", "json"), "matrices supports text or json")
    payload = ser.matrices_payload(ctx)
    if args.format == "json":
        return ser.to_json(payload)
    f = family_map(ctx)
    lam_plus = ser.triple_to_quad(payload["eigen"]["lambda_plus"])
    lam_minus = ser.triple_to_quad(payload["eigen"]["lambda_minus"])
    v_plus_y = ser.triple_to_quad(payload["eigen"]["v_plus"]["y"])
    v_minus_x = ser.triple_to_quad(payload["eigen"]["v_minus"]["x"])
    lines = [
        f"n = {ctx.n}",
        f"M1 = {payload['matrices']['M1']}",
        f"M2 = {payload['matrices']['M2']}",
        f"F = M2 M1 = {payload['matrices']['F']}",
        f"charpoly: t^2 - {f.trace} t + {f.det}",
        f"lambda_plus  = {lam_plus} ~ {ser.quad_to_decimal_str(lam_plus, args.precision)}",
        f"lambda_minus = {lam_minus} ~ {ser.quad_to_decimal_str(lam_minus, args.precision)}",
        f"v_plus  = (-1, {v_plus_y})",
        f"v_minus = ({v_minus_x}, -1)",
    ]
    return "\n".join(lines) + "\n"


def _cmd_degree(ctx: FamilyContext, args) -> str:
    if args.estimate is None:
        if args.figure:
            raise _UsageError("--figure requires --estimate")
        if args.ample != "1,1":
            raise _UsageError("--ample requires --estimate")
        _require_format(args, ("text", "json"), "exact degree supports text or json")
        lam = dyn_degree_exact(ctx)
        if args.format == "json":
            return ser.to_json({
                "n": ctx.n,
                "d1": ser.quad_to_triple(lam),
                "d1_decimal": ser.quad_to_decimal_str(lam, args.precision),
            })
        return (f"n = {ctx.n}\n"
                f"d1 = {lam}\n"
                f"d1 ~ {ser.quad_to_decimal_str(lam, args.precision)}\n")

    if args.estimate < 1:
        raise _UsageError("--estimate must be at least 1")
    H = _parse_class(args.ample)
    table = degree_estimators(ctx, H=H, k_max=args.estimate, precision=args.precision)
    if args.figure:
        from . import plots
        plots.degree_figure(table, dyn_degree_exact(ctx), args.figure)
    if args.format == "json":
        return ser.to_json(ser.degree_table_to_dict(table))
    if args.format == "csv":
        return ser.degree_table_to_csv(table)
    rows = [[str(r.k), str(r.pullback.x), str(r.pullback.y), str(r.P),
             r.s or "", r.t or ""] for r in table.rows]
    head = (f"n = {ctx.n}, H = {ser.class_to_str(H)}, "
            f"P_k = ((f^k)* H . H^{ctx.n - 1})\n")
    return head + _table_text(ser.DEGREE_COLUMNS, rows)


def _cmd_reduce(ctx: FamilyContext, args) -> str:
    _require_format(args, ("text", "json"), "reduce supports text or json")
    cls = _parse_class(args.cls)
    result = reduce_to_nef(ctx, cls)
    if args.format == "json":
        return ser.to_json({"n": ctx.n, **ser.reduction_to_dict(result)})
    word = str(result.word) or "(empty)"
    steps = " -> ".join(ser.class_to_str(s) for s in result.steps)
    return (f"input: {ser.class_to_str(cls)}\n"
            f"word: {word}\n"
            f"word length: {len(result.word)}\n"
            f"nef class: {ser.class_to_str(result.nef_class)}\n"
            f"steps: {steps}\n")


def _cmd_cone(ctx: FamilyContext, args) -> str:
    _require_format(args, ("text", "json"), "cone supports text or json")
    cls = _parse_class(args.cls)
    nef = nef_membership(ctx, cls)
    movable = movable_membership(ctx, cls)
    if args.format == "json":
        return ser.to_json({"n": ctx.n, **ser.cone_payload(cls, nef, movable)})
    return (f"class: {ser.class_to_str(cls)}\n"
            f"nef: {nef.verdict}  (witness signs: {nef.witness[0]}, {nef.witness[1]})\n"
            f"movable: {movable.verdict}  (witness signs: {movable.witness[0]}, "
            f"{movable.witness[1]})\n")


def _cmd_orbit(ctx: FamilyContext, args) -> str:
    if args.steps < 1:
        raise _UsageError("--steps must be at least 1")
    cls = _parse_class(args.cls)
    direction = "backward" if args.backward else "forward"
    trace = ray_convergence(ctx, cls, k_max=args.steps, direction=direction)
    if args.figure:
        from . import plots
        plots.orbit_figure(trace, args.figure)
    if args.format == "json":
        return ser.to_json({"n": ctx.n, **ser.ray_trace_to_dict(trace, args.precision)})
    if args.format == "csv":
        return ser.ray_trace_to_csv(trace, args.precision)
    target = ser.quad_to_decimal_str(trace.target_slope, args.precision)
    rows = []
    for r in trace.rows:
        slope = "" if r.slope is None else ser.fraction_to_decimal_str(r.slope, args.precision)
        rows.append([str(r.k), str(r.cls.x), str(r.cls.y), slope,
                     ser.distance_display(r, args.precision)])
    head = (f"n = {ctx.n}, direction = {direction}, "
            f"target slope = {trace.target_slope} ~ {target}\n")
    return head + _table_text(ser.ORBIT_COLUMNS, rows)


def _cmd_report(ctx: FamilyContext, args) -> str:
    _require_format(args, ("text", "json"), "report supports text or json")
    if args.samples < 0:
        raise _UsageError("--samples must be nonnegative")
    report = primitivity_report(ctx, sample_count=args.samples, seed=args.seed)
    if args.figure:
        from . import plots
        plots.report_figure(report, args.figure)
    if args.format == "json":
        return ser.to_json(ser.report_to_dict(report, args.precision))
    fixed = report.fixed_rational_vector
    if fixed is ALL_FIXED:
        fixed_text = "all vectors fixed"
    elif fixed is None:
        fixed_text = "none"
    else:
        fixed_text = ser.class_to_str(fixed)
    ev = report.semiample_samples
    lines = [
        f"primitivity checklist for n = {ctx.n}",
        f"  irreducible over Q: {'yes' if report.condition2_irreducible else 'no'}",
        f"  d1 = {report.d1_exact} ~ {ser.quad_to_decimal_str(report.d1_exact, args.precision)}",
        f"  d1 > 1: {'yes' if report.d1_greater_than_1 else 'no'}",
        f"  determinant a unit: {'yes' if report.det_unit else 'no'}",
        f"  fixed rational vector: {fixed_text}",
        f"  semiample sampling: {ev.reduced}/{ev.requested} reduced, "
        f"max word length {ev.max_word_length}",
        f"verdict: {report.verdict}",
        "assumptions:",
    ]
    lines.extend(f"  - {a}" for a in report.assumptions)
    return "\n".join(lines) + "\n"


def _cmd_chambers(ctx: FamilyContext, args) -> str:
    _require_format(args, ("text", "json"), "chambers supports text or json")
    if args.depth < 0:
        raise _UsageError("--depth must be nonnegative")
    walls = chamber_walls(ctx, args.depth)
    render_chamber_svg(ctx, args.depth, args.svg)
    if args.format == "json":
        return ser.to_json({
            "n": ctx.n,
            "depth": args.depth,
            "svg": args.svg,
            "walls": [{"x": str(w.ray.x), "y": str(w.ray.y),
                       "word": str(w.word), "generator": f"h{w.generator}"}
                      for w in walls],
        })
    lines = [f"n = {ctx.n}, depth = {args.depth}, walls = {len(walls)}",
             f"svg written to {args.svg}",
             "walls (counterclockwise):"]
    for w in walls:
        word = str(w.word) or "(empty)"
        lines.append(f"  ({ser.class_to_str(w.ray)})  image of h{w.generator}  word: {word}")
    return "\n".join(lines) + "\n"


# -- parser and entry point ----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flopdyn",
        description="Exact flop dynamics on a rank-2 divisor lattice: "
                    "cone tests, flop words, and dynamical degree data.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, metavar="N",
                        help="family parameter (n >= 3)")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default: text)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write the artifact here instead of stdout")
    common.add_argument("--precision", type=int, default=12, metavar="P",
                        help="significant digits for decimal display (default: 12)")

    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("matrices", parents=[common],
                       help="involution matrices, composite map, exact spectrum")
    p.set_defaults(func=_cmd_matrices)

    p = sub.add_parser("degree", parents=[common],
                       help="dynamical degree, exact or estimated from pairings")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true",
                      help="exact closed form (default)")
    mode.add_argument("--estimate", type=int, metavar="K",
                      help="pairing table and estimators up to iterate K")
    p.add_argument("--ample", metavar="X,Y", default="1,1",
                   help="nef test class for --estimate (default: 1,1)")
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="also render the estimator figure to PATH")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("reduce", parents=[common],
                       help="flop word carrying a movable class to the nef cone")
    p.add_argument("--class", dest="cls", metavar="X,Y", required=True,
                   help="rational class coordinates, e.g. -7,41 or -7/3,41/3")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("cone", parents=[common],
                       help="nef and movable membership of a class")
    p.add_argument("--class", dest="cls", metavar="X,Y", required=True,
                   help="class coordinates")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("orbit", parents=[common],
                       help="projective convergence of iterates to an eigenray")
    p.add_argument("--class", dest="cls", metavar="X,Y", required=True,
                   help="nonzero nef start class")
    p.add_argument("--steps", type=int, default=10, metavar="K",
                   help="number of iterates (default: 10)")
    p.add_argument("--backward", action="store_true",
                   help="iterate the inverse map toward v_minus")
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="also render the distance figure to PATH")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("report", parents=[common],
                       help="primitivity checklist with sampled reductions")
    p.add_argument("--samples", type=int, default=100, metavar="S",
                   help="number of sampled movable classes (default: 100)")
    p.add_argument("--seed", type=int, default=0, metavar="R",
                   help="sampling seed (default: 0)")
    p.add_argument("--figure", metavar="PATH", default=None,
                   help="also render the word-length histogram to PATH")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("chambers", parents=[common],
                       help="chamber wall rays and a deterministic SVG rendering")
    p.add_argument("--depth", type=int, default=3, metavar="D",
                   help="maximum word length (default: 3)")
    p.add_argument("--svg", metavar="PATH", required=True,
                   help="write the SVG here")
    p.set_defaults(func=_cmd_chambers)

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Sequence[str] | None = None) -> int:
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_pair_flags(raw))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        if args.n < 3:
            raise _UsageError("--n must be at least 3")
        if args.precision < 1:
            raise _UsageError("--precision must be at least 1")
        ctx = FamilyContext(args.n)
        text = args.func(ctx, args)
        _emit(text, args.output)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

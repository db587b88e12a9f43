"""JSON and CSV emitters, with parsers for the round-trip schemas.

Exact values never degrade on the way out: quadratic numbers are serialized
as string triples {"a", "b", "d"}, integer and rational coordinates as exact
strings.  Plain decimals appear only in the explicitly approximate columns
(s_k, t_k, slopes, distances), already rounded by the dynamics layer or
rendered here at a requested precision.  Structural integers (n, k, counts,
signs, word lengths) stay native JSON numbers.

CSV column orders are fixed: degree tables use k,x,y,P_k,s_k,t_k and orbit
traces use k,x,y,slope,dist_to_target.
"""

from __future__ import annotations

import csv
import decimal
import io
import json
from fractions import Fraction

from .cones import ConeMembership, FlopWord, ReductionResult
from .divisors import DivisorClass
from .dynamics import DegreeRow, DegreeTable, RayTrace
from .intersection import FamilyContext
from .lattice import eigen_data, family_map
from .primitivity import (ALL_FIXED, PrimitivityReport, SemiampleEvidence)
from .quadfield import QuadElem

DEGREE_COLUMNS = ("k", "x", "y", "P_k", "s_k", "t_k")
ORBIT_COLUMNS = ("k", "x", "y", "slope", "dist_to_target")


# -- exact scalars ------------------------------------------------------------

def quad_to_triple(q: QuadElem) -> dict[str, str]:
    return {"a": str(q.a), "b": str(q.b), "d": str(q.d)}


def triple_to_quad(obj: dict[str, str]) -> QuadElem:
    return QuadElem(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["d"]))


def class_to_str(cls: DivisorClass) -> str:
    return f"{cls.x},{cls.y}"


def class_from_str(text: str) -> DivisorClass:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y', got {text!r}")
    coords = []
    for part in parts:
        frac = Fraction(part.strip())
        coords.append(int(frac) if frac.denominator == 1 else frac)
    return DivisorClass(*coords)


def quad_to_decimal_str(q: QuadElem, precision: int) -> str:
    """a + b*sqrt(d) as a decimal with `precision` significant digits."""
    with decimal.localcontext() as c:
        c.prec = precision + 5
        root = decimal.Decimal(q.d).sqrt()
        a = decimal.Decimal(q.a.numerator) / decimal.Decimal(q.a.denominator)
        b = decimal.Decimal(q.b.numerator) / decimal.Decimal(q.b.denominator)
        value = a + b * root
    return str(decimal.Context(prec=precision).create_decimal(value))


def fraction_to_decimal_str(q: Fraction, precision: int) -> str:
    with decimal.localcontext() as c:
        c.prec = precision
        return str(decimal.Decimal(q.numerator) / decimal.Decimal(q.denominator))


# -- matrices and eigen data --------------------------------------------------

def matrices_payload(ctx: FamilyContext) -> dict:
    """The two involution matrices, their composite, and its exact spectrum."""
    from .lattice import involution_matrix

    f = family_map(ctx)
    spectrum = eigen_data(ctx, f)
    lam_plus, lam_minus = spectrum.eigenvalues
    v_plus, v_minus = spectrum.eigenrays
    return {
        "n": ctx.n,
        "matrices": {
            "M1": [list(row) for row in involution_matrix(ctx, 1).entries],
            "M2": [list(row) for row in involution_matrix(ctx, 2).entries],
            "F": [list(row) for row in f.entries],
        },
        "eigen": {
            "lambda_plus": quad_to_triple(lam_plus),
            "lambda_minus": quad_to_triple(lam_minus),
            "v_plus": {"x": quad_to_triple(v_plus.x), "y": quad_to_triple(v_plus.y)},
            "v_minus": {"x": quad_to_triple(v_minus.x), "y": quad_to_triple(v_minus.y)},
        },
    }


# -- degree tables ------------------------------------------------------------

def degree_table_to_dict(table: DegreeTable) -> dict:
    rows = []
    for row in table.rows:
        rows.append({
            "k": row.k,
            "x": str(row.pullback.x),
            "y": str(row.pullback.y),
            "P_k": str(row.P),
            "s_k": row.s,
            "t_k": row.t,
        })
    return {"n": table.n, "precision": table.precision, "rows": rows}


def degree_table_from_dict(obj: dict) -> DegreeTable:
    rows = []
    for row in obj["rows"]:
        rows.append(DegreeRow(
            k=row["k"],
            pullback=class_from_str(f"{row['x']},{row['y']}"),
            P=int(row["P_k"]),
            s=row["s_k"],
            t=row["t_k"],
        ))
    return DegreeTable(n=obj["n"], precision=obj["precision"], rows=tuple(rows))


def degree_table_to_csv(table: DegreeTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(DEGREE_COLUMNS)
    for row in table.rows:
        writer.writerow([row.k, str(row.pullback.x), str(row.pullback.y),
                         str(row.P), row.s or "", row.t or ""])
    return out.getvalue()


# -- ray traces ---------------------------------------------------------------

def distance_display(row, precision: int) -> str:
    if isinstance(row.distance, QuadElem):
        return quad_to_decimal_str(row.distance, precision)
    return f"{row.distance:.{precision}g}"


def ray_trace_to_dict(trace: RayTrace, precision: int = 12) -> dict:
    rows = []
    for row in trace.rows:
        rows.append({
            "k": row.k,
            "x": str(row.cls.x),
            "y": str(row.cls.y),
            "slope": None if row.slope is None else str(row.slope),
            "dist_to_target": distance_display(row, precision),
        })
    return {
        "direction": trace.direction,
        "target_slope": quad_to_triple(trace.target_slope),
        "metric": trace.metric,
        "rows": rows,
    }


def ray_trace_to_csv(trace: RayTrace, precision: int = 12) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(ORBIT_COLUMNS)
    for row in trace.rows:
        slope = "" if row.slope is None else fraction_to_decimal_str(
            Fraction(row.slope), precision)
        writer.writerow([row.k, str(row.cls.x), str(row.cls.y), slope,
                         distance_display(row, precision)])
    return out.getvalue()


# -- reductions and cone verdicts ----------------------------------------------

def reduction_to_dict(result: ReductionResult) -> dict:
    return {
        "word": list(result.word.symbols),
        "word_length": len(result.word),
        "nef_class": class_to_str(result.nef_class),
        "steps": [class_to_str(step) for step in result.steps],
    }


def reduction_from_dict(obj: dict) -> ReductionResult:
    letters = tuple(int(sym[1:]) for sym in obj["word"])
    return ReductionResult(
        word=FlopWord(letters),
        nef_class=class_from_str(obj["nef_class"]),
        steps=tuple(class_from_str(s) for s in obj["steps"]),
    )


def membership_to_dict(membership: ConeMembership) -> dict:
    return {"verdict": membership.verdict, "witness": list(membership.witness)}


def cone_payload(cls: DivisorClass, nef: ConeMembership,
                 movable: ConeMembership) -> dict:
    return {
        "class": class_to_str(cls),
        "nef": membership_to_dict(nef),
        "movable": membership_to_dict(movable),
    }


# -- primitivity reports --------------------------------------------------------

def report_to_dict(report: PrimitivityReport, precision: int = 12) -> dict:
    fixed = report.fixed_rational_vector
    if fixed is ALL_FIXED:
        fixed_out: str | None = "all_fixed"
    elif fixed is None:
        fixed_out = None
    else:
        fixed_out = class_to_str(fixed)
    return {
        "n": report.n,
        "report": {
            "condition2_irreducible": report.condition2_irreducible,
            "d1": quad_to_triple(report.d1_exact),
            "d1_decimal": quad_to_decimal_str(report.d1_exact, precision),
            "d1_greater_than_1": report.d1_greater_than_1,
            "det_unit": report.det_unit,
            "fixed_rational_vector": fixed_out,
            "semiample_samples": {
                "requested": report.semiample_samples.requested,
                "reduced": report.semiample_samples.reduced,
                "max_word_length": report.semiample_samples.max_word_length,
                "word_lengths": list(report.semiample_samples.word_lengths),
            },
            "verdict": report.verdict,
            "assumptions": list(report.assumptions),
        },
    }


def report_from_dict(obj: dict) -> PrimitivityReport:
    body = obj["report"]
    fixed_in = body["fixed_rational_vector"]
    if fixed_in == "all_fixed":
        fixed: DivisorClass | None | object = ALL_FIXED
    elif fixed_in is None:
        fixed = None
    else:
        fixed = class_from_str(fixed_in)
    samples = body["semiample_samples"]
    return PrimitivityReport(
        n=obj["n"],
        condition2_irreducible=body["condition2_irreducible"],
        d1_exact=triple_to_quad(body["d1"]),
        d1_greater_than_1=body["d1_greater_than_1"],
        det_unit=body["det_unit"],
        fixed_rational_vector=fixed,
        semiample_samples=SemiampleEvidence(
            requested=samples["requested"],
            reduced=samples["reduced"],
            word_lengths=tuple(samples["word_lengths"]),
        ),
        verdict=body["verdict"],
        assumptions=tuple(body["assumptions"]),
    )


def to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"

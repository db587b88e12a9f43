"""Dynamical degree of the composite flop map: exact value and estimators.

The first dynamical degree is the growth rate of the intersection numbers

    P_k = ((f^k)* H . H^(n-1))

for an ample H.  On this family it equals the top eigenvalue of the pullback
matrix, lambda_plus = (2n^2 - 1) + 2n*sqrt(n^2 - 1), which this module
returns exactly.  Two numerical estimators accompany it:

  * the root estimator s_k = P_k^(1/k), converging like O(1/k) in log scale,
  * the ratio estimator t_k = P_{k+1}/P_k, converging geometrically at rate
    lambda_plus^(-2k) because lambda_plus * lambda_minus = 1.

P_k is computed with exact big integers; decimals appear only in display
columns, rounded to a configurable number of significant digits.

The module also traces projective ray convergence: the iterates (f^k)* x of a
nonzero nef class converge in direction to the eigenray v_plus (v_minus under
backward iteration), and the trace records the exact slope distance each step.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction

from .cones import OUTSIDE, nef_membership
from .divisors import DivisorClass
from .intersection import FamilyContext, ample_test_class, pairing
from .lattice import family_map
from .quadfield import QuadElem


def dyn_degree_exact(ctx: FamilyContext) -> QuadElem:
    """First dynamical degree (2n^2 - 1) + 2n*sqrt(n^2 - 1), exact."""
    n = ctx.n
    return QuadElem(2 * n * n - 1, 2 * n, ctx.d)


def _sig_digits(value: decimal.Decimal, precision: int) -> str:
    return str(decimal.Context(prec=precision).create_decimal(value))


def _ratio_display(num: int, den: int, precision: int) -> str:
    with decimal.localcontext() as c:
        c.prec = precision
        return str(decimal.Decimal(num) / decimal.Decimal(den))


def _root_display(value: int, k: int, precision: int) -> str:
    if k == 1:
        return str(value)
    # value ** (1/k) via exp(ln/k); exact integers can be arbitrarily large
    with decimal.localcontext() as c:
        c.prec = precision + 5
        root = (decimal.Decimal(value).ln() / k).exp()
    return _sig_digits(root, precision)


@dataclass(frozen=True)
class DegreeRow:
    """One iterate: pullback class, exact pairing, display estimators."""

    k: int
    pullback: DivisorClass
    P: int
    s: str | None
    t: str | None


class DegreeTable:
    """Exact pairings P_k with root and ratio estimator columns.

    ``rows[k]`` holds P_k and the display strings s_k (for k >= 1) and t_k
    (for k < k_max).  ``t_exact`` exposes the ratio as a Fraction for exact
    error-envelope checks.
    """

    __slots__ = ("n", "precision", "rows")

    def __init__(self, n: int, precision: int, rows: tuple[DegreeRow, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DegreeTable is immutable")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreeTable):
            return NotImplemented
        return (self.n, self.precision, self.rows) == (other.n, other.precision, other.rows)

    def pairings(self) -> tuple[int, ...]:
        return tuple(row.P for row in self.rows)

    def t_exact(self, k: int) -> Fraction:
        """Exact ratio P_{k+1} / P_k."""
        return Fraction(self.rows[k + 1].P, self.rows[k].P)


def degree_estimators(ctx: FamilyContext, H: DivisorClass | None = None,
                      k_max: int = 10, precision: int = 12) -> DegreeTable:
    """Table of P_k = ((f^k)* H . H^(n-1)) for k = 0..k_max, H nef.

    H defaults to h1 + h2.  P_k is exact; the s_k and t_k columns are
    decimals with `precision` significant digits.
    """
    if H is None:
        H = ample_test_class()
    if not isinstance(k_max, int) or k_max < 1:
        raise ValueError("k_max must be a positive integer")
    if H.is_zero() or nef_membership(ctx, H).verdict == OUTSIDE:
        raise ValueError("estimator requires a nonzero nef class")

    f = family_map(ctx)
    fixed = (H,) * (ctx.n - 1)
    iterates = [H]
    for _ in range(k_max):
        iterates.append(f.apply(iterates[-1]))

    pairings = [pairing(ctx, (cls,) + fixed) for cls in iterates]
    rows = []
    for k in range(k_max + 1):
        s = _root_display(pairings[k], k, precision) if k >= 1 else None
        t = _ratio_display(pairings[k + 1], pairings[k], precision) if k < k_max else None
        rows.append(DegreeRow(k=k, pullback=iterates[k], P=pairings[k], s=s, t=t))
    return DegreeTable(n=ctx.n, precision=precision, rows=tuple(rows))


@dataclass(frozen=True)
class RayRow:
    """One normalized iterate and its distance to the target eigenray.

    ``slope`` is y/x, None when x = 0.  ``distance`` is the exact slope gap
    |y/x - target slope| as a QuadElem whenever the slope is defined, and the
    projective chordal distance as a float otherwise.
    """

    k: int
    cls: DivisorClass
    slope: Fraction | None
    distance: QuadElem | float


class RayTrace:
    """Projective convergence record toward v_plus or v_minus."""

    __slots__ = ("direction", "target_slope", "metric", "rows")

    def __init__(self, direction: str, target_slope: QuadElem,
                 rows: tuple[RayRow, ...]) -> None:
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "target_slope", target_slope)
        object.__setattr__(self, "metric",
                           "absolute slope difference; projective chordal when x = 0")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RayTrace is immutable")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def _chordal(x: int, y: int, u: float, v: float) -> float:
    return abs(x * v - y * u) / (math.hypot(x, y) * math.hypot(u, v))


def ray_convergence(ctx: FamilyContext, x0: DivisorClass, k_max: int = 10,
                    direction: str = "forward") -> RayTrace:
    """Trace of (f^k)* x0 directions for k = 0..k_max.

    Forward iteration converges to the v_plus ray (slope -(n + sqrt(d))),
    backward to v_minus (slope -(n - sqrt(d))).  x0 must be a nonzero nef
    class; its coordinates must be integers or rationals.
    """
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    if not isinstance(k_max, int) or k_max < 1:
        raise ValueError("k_max must be a positive integer")
    if x0.is_zero() or nef_membership(ctx, x0).verdict == OUTSIDE:
        raise ValueError("ray trace requires a nonzero nef class")

    n = ctx.n
    if direction == "forward":
        action = family_map(ctx, "forward")
        target = QuadElem(-n, -1, ctx.d)
    else:
        action = family_map(ctx, "inverse")
        target = QuadElem(-n, 1, ctx.d)

    rows = []
    current = x0
    for k in range(k_max + 1):
        if current.x != 0:
            slope = Fraction(current.y, current.x)
            distance: QuadElem | float = abs(slope - target)
        else:
            slope = None
            tf = float(target)
            distance = _chordal(current.x, current.y, 1.0, tf)
        rows.append(RayRow(k=k, cls=current, slope=slope, distance=distance))
        current = action.apply(current)
    return RayTrace(direction=direction, target_slope=target, rows=tuple(rows))

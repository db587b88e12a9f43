"""Integer matrix actions on the rank-2 divisor lattice.

Convention, fixed once: matrices act on coordinate columns (x, y).  The two
covering involutions of the degree-2 projections pull divisor classes back by

    t1: (x, y) -> (x + 2n y, -y)        t2: (x, y) -> (-x, 2n x + y)

and the composite map t1 o t2 pulls back by the product taken in the reverse
order (pullback is contravariant), so its matrix is M2 M1.  Every action here
is a lattice automorphism: |det| = 1 is enforced at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .divisors import DivisorClass
from .intersection import FamilyContext
from .quadfield import QuadElem, is_perfect_square


class LatticeAction:
    """2x2 integer matrix ((a, b), (c, d)) acting on coordinate columns."""

    __slots__ = ("entries", "label")

    def __init__(self, entries, label: str | None = None) -> None:
        (a, b), (c, d) = entries
        for e in (a, b, c, d):
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError("matrix entries must be integers")
        det = a * d - b * c
        if det not in (1, -1):
            raise ValueError(f"not a lattice automorphism: determinant {det}")
        object.__setattr__(self, "entries", ((a, b), (c, d)))
        object.__setattr__(self, "label", label)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LatticeAction is immutable")

    @property
    def trace(self) -> int:
        return self.entries[0][0] + self.entries[1][1]

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def is_identity(self) -> bool:
        return self.entries == ((1, 0), (0, 1))

    @classmethod
    def identity(cls) -> "LatticeAction":
        return cls(((1, 0), (0, 1)), label="id")

    def __matmul__(self, other: "LatticeAction") -> "LatticeAction":
        if not isinstance(other, LatticeAction):
            return NotImplemented
        (a, b), (c, d) = self.entries
        (p, q), (r, s) = other.entries
        return LatticeAction(((a * p + b * r, a * q + b * s),
                              (c * p + d * r, c * q + d * s)))

    def inverse(self) -> "LatticeAction":
        (a, b), (c, d) = self.entries
        det = self.det
        # adjugate over det; integral because det = +-1
        return LatticeAction(((d * det, -b * det), (-c * det, a * det)))

    def __pow__(self, k: int) -> "LatticeAction":
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = LatticeAction.identity()
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def apply(self, cls: DivisorClass) -> DivisorClass:
        """Matrix-column product on the coordinates of a divisor class."""
        (a, b), (c, d) = self.entries
        return DivisorClass(a * cls.x + b * cls.y, c * cls.x + d * cls.y)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeAction):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        tag = f", label={self.label!r}" if self.label else ""
        return f"LatticeAction({self.entries!r}{tag})"


@dataclass(frozen=True)
class EigenData:
    """Spectrum of a lattice action: t^2 - trace*t + det, exactly.

    ``eigenvalues`` is (larger root, smaller root); ``eigenrays`` pairs each
    eigenvalue with a spanning class of its eigenline, or is None when the
    spectrum is a double root (every normalization of the eigenline data
    degenerates).
    """

    charpoly: tuple[int, int]
    eigenvalues: tuple[QuadElem, QuadElem]
    eigenrays: tuple[DivisorClass, DivisorClass] | None


def involution_matrix(ctx: FamilyContext, i: int) -> LatticeAction:
    """Pullback matrix of the i-th covering involution (i = 1 or 2)."""
    n = ctx.n
    if i == 1:
        return LatticeAction(((1, 2 * n), (0, -1)), label="t1")
    if i == 2:
        return LatticeAction(((-1, 0), (2 * n, 1)), label="t2")
    raise ValueError(f"involution index must be 1 or 2, got {i}")


def family_map(ctx: FamilyContext, direction: str = "forward") -> LatticeAction:
    """Pullback of the composite map t1 o t2 (forward) or its inverse."""
    n = ctx.n
    if direction == "forward":
        return LatticeAction(((-1, -2 * n), (2 * n, 4 * n * n - 1)), label="f")
    if direction == "inverse":
        return LatticeAction(((4 * n * n - 1, 2 * n), (-2 * n, -1)), label="f^-1")
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def is_irreducible_over_Q(action: LatticeAction) -> bool:
    """True iff t^2 - trace*t + det has no rational root.

    In rank 2 a rational root is equivalent to a proper nonzero invariant
    rational subspace, so this decides irreducibility of the action on the
    rational lattice.  The test is whether trace^2 - 4 det is a perfect
    square (negative discriminants have no real roots at all, hence no
    rational ones).
    """
    disc = action.trace * action.trace - 4 * action.det
    return not (disc >= 0 and is_perfect_square(disc))


def _eigenvalue_pair(ctx: FamilyContext, trace: int, disc: int) -> tuple[QuadElem, QuadElem]:
    half_trace = Fraction(trace, 2)
    if disc == 0:
        lam = QuadElem(half_trace, 0, ctx.d)
        return (lam, lam)
    root = math.isqrt(disc)
    if root * root == disc:
        # rational spectrum; represent with zero radical part
        hi = QuadElem(half_trace + Fraction(root, 2), 0, ctx.d)
        lo = QuadElem(half_trace - Fraction(root, 2), 0, ctx.d)
        return (hi, lo)
    # prefer the context radicand when sqrt(disc) is a multiple of sqrt(d)
    quot, rem = divmod(disc, ctx.d)
    if rem == 0 and is_perfect_square(quot):
        d, scale = ctx.d, Fraction(math.isqrt(quot), 2)
    else:
        d, scale = disc, Fraction(1, 2)
    return (
        QuadElem(half_trace, scale, d),
        QuadElem(half_trace, -scale, d),
    )


def _eigenray(action: LatticeAction, lam: QuadElem) -> DivisorClass:
    (a, b), (c, d) = action.entries
    if b != 0:
        return DivisorClass(b, lam - a)
    if c != 0:
        return DivisorClass(lam - d, c)
    # diagonal matrix: eigenlines are the axes
    if lam == a:
        return DivisorClass(1, 0)
    return DivisorClass(0, 1)


def eigen_data(ctx: FamilyContext, action: LatticeAction) -> EigenData:
    """Exact spectrum and eigenrays of a lattice action.

    Raises on a complex spectrum.  For the matrix of the composite flop map
    (either direction) the eigenvalues come out over the context radicand as
    (2n^2 - 1) +- 2n*sqrt(n^2 - 1) and the eigenrays in the normalized form
    (-1, n + sqrt(n^2-1)) / (n + sqrt(n^2-1), -1).
    """
    trace, det = action.trace, action.det
    disc = trace * trace - 4 * det
    if disc < 0:
        raise ValueError("non-real eigenvalues")
    eigenvalues = _eigenvalue_pair(ctx, trace, disc)

    n = ctx.n
    v_plus = DivisorClass(QuadElem(-1, 0, ctx.d), QuadElem(n, 1, ctx.d))
    v_minus = DivisorClass(QuadElem(n, 1, ctx.d), QuadElem(-1, 0, ctx.d))
    if action == family_map(ctx, "forward"):
        rays = (v_plus, v_minus)
    elif action == family_map(ctx, "inverse"):
        # the inverse expands along v_minus and contracts along v_plus
        rays = (v_minus, v_plus)
    elif disc == 0:
        rays = None
    else:
        rays = (_eigenray(action, eigenvalues[0]), _eigenray(action, eigenvalues[1]))
    return EigenData(charpoly=(trace, det), eigenvalues=eigenvalues, eigenrays=rays)


def spectral_radius(ctx: FamilyContext, action: LatticeAction) -> QuadElem:
    """Largest |eigenvalue|, exact.

    A complex pair forces |lambda|^2 = det = 1 (the determinant is a unit),
    so the radius is 1 in that case.
    """
    trace, det = action.trace, action.det
    disc = trace * trace - 4 * det
    if disc < 0:
        return QuadElem(1, 0, ctx.d)
    hi, lo = _eigenvalue_pair(ctx, trace, disc)
    hi_abs, lo_abs = abs(hi), abs(lo)
    return hi_abs if (hi_abs - lo_abs).sign() >= 0 else lo_abs


def apply_power(action: LatticeAction, k: int, cls: DivisorClass) -> DivisorClass:
    """Exact A^k applied to a class; negative k uses the exact inverse."""
    return (action ** k).apply(cls)

"""Divisor classes on a rank-2 lattice, as exact coordinate pairs.

A class x*h1 + y*h2 is the pair (x, y) in the basis of the two hyperplane
restrictions.  Coordinates are exact: int, Fraction, or QuadElem; floats are
rejected.  Both coordinates are promoted to a common scalar kind at
construction (integer < rational < quadratic).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .quadfield import QuadElem

Scalar = int | Fraction | QuadElem

KIND_INTEGER = "integer"
KIND_RATIONAL = "rational"
KIND_QUADRATIC = "quadratic"


def _kind_of(value: Scalar) -> str:
    if isinstance(value, QuadElem):
        return KIND_QUADRATIC
    if isinstance(value, Fraction):
        return KIND_RATIONAL
    if isinstance(value, int):
        return KIND_INTEGER
    raise TypeError(f"exact coordinate required, got {type(value).__name__}")


class DivisorClass:
    """Exact coordinate pair (x, y); the zero class is (0, 0)."""

    __slots__ = ("x", "y", "kind")

    def __init__(self, x: Scalar, y: Scalar) -> None:
        kx, ky = _kind_of(x), _kind_of(y)
        if KIND_QUADRATIC in (kx, ky):
            if kx == ky:
                if x.d != y.d:  # type: ignore[union-attr]
                    raise ValueError("incompatible radicands")
                d = x.d  # type: ignore[union-attr]
            else:
                d = (x if kx == KIND_QUADRATIC else y).d  # type: ignore[union-attr]
            x = x if isinstance(x, QuadElem) else QuadElem(x, 0, d)
            y = y if isinstance(y, QuadElem) else QuadElem(y, 0, d)
            kind = KIND_QUADRATIC
        elif KIND_RATIONAL in (kx, ky):
            x, y = Fraction(x), Fraction(y)
            kind = KIND_RATIONAL
        else:
            kind = KIND_INTEGER
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("DivisorClass is immutable")

    @property
    def coords(self) -> tuple[Scalar, Scalar]:
        return (self.x, self.y)

    def is_zero(self) -> bool:
        if self.kind == KIND_QUADRATIC:
            return self.x.is_zero() and self.y.is_zero()  # type: ignore[union-attr]
        return self.x == 0 and self.y == 0

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return DivisorClass(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.x, -self.y)

    def __rmul__(self, scalar: Scalar) -> "DivisorClass":
        _kind_of(scalar)
        return DivisorClass(scalar * self.x, scalar * self.y)

    __mul__ = __rmul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DivisorClass):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __iter__(self):
        return iter((self.x, self.y))

    def __str__(self) -> str:
        return f"{self.x},{self.y}"

    def __repr__(self) -> str:
        return f"DivisorClass({self.x!r}, {self.y!r})"

    # -- integral form ---------------------------------------------------------

    def primitive(self) -> "DivisorClass":
        """Primitive integer class on the same ray (positive scaling only).

        Requires integer or rational coordinates; quadratic classes have no
        canonical integral representative.
        """
        if self.kind == KIND_QUADRATIC:
            raise ValueError("no primitive integer form for quadratic coordinates")
        if self.is_zero():
            return DivisorClass(0, 0)
        fx, fy = Fraction(self.x), Fraction(self.y)
        scale = Fraction(math.lcm(fx.denominator, fy.denominator))
        ix, iy = int(fx * scale), int(fy * scale)
        g = math.gcd(ix, iy)
        return DivisorClass(ix // g, iy // g)

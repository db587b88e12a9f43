"""Exact arithmetic in the real quadratic field Q(sqrt(d)).

Elements are stored as a pair of exact rationals (a, b) meaning a + b*sqrt(d),
with the radicand d a fixed positive non-square integer.  The radicand is kept
as given (e.g. 8 rather than 2); nothing here needs a square-free kernel.

Signs are decided without floating point: the sign of a + b*sqrt(d) follows
from the signs of a and b and, in the mixed case, from comparing a^2 with
b^2*d over the rationals.  Floats appear only in display helpers.

Rationals are carried by :class:`fractions.Fraction`, which already keeps
them in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

ScalarLike = int | Fraction


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def rational_sign(q: ScalarLike) -> int:
    """Sign of an exact rational as -1, 0 or +1."""
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


class QuadElem:
    """An element a + b*sqrt(d) of Q(sqrt(d)), with exact coefficients.

    Two elements interoperate only when their radicands agree; mixing
    radicands raises ``ValueError("incompatible radicands")``.  Equality is
    coefficient-wise, which is exact equality of real numbers because sqrt(d)
    is irrational for non-square d.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: ScalarLike, b: ScalarLike = 0, d: int = 2) -> None:
        d = int(d)
        if d <= 0:
            raise ValueError("radicand must be positive")
        if is_perfect_square(d):
            raise ValueError(f"radicand {d} is a perfect square; sqrt({d}) is rational")
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("QuadElem coefficients must be exact (int or Fraction)")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QuadElem is immutable")

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other: object) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise ValueError("incompatible radicands")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(other, 0, self.d)
        return NotImplemented  # type: ignore[return-value]

    # -- field operations --------------------------------------------------

    def __add__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.a, -self.b, self.d)

    def __mul__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        # (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) s
        return QuadElem(
            self.a * o.a + self.b * o.b * self.d,
            self.a * o.b + o.a * self.b,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        """Multiplicative inverse (a - b*sqrt(d)) / (a^2 - b^2 d)."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        nrm = self.norm()
        return QuadElem(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> "QuadElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> "QuadElem":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadElem(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d (product with the conjugate)."""
        return self.a * self.a - self.b * self.b * self.d

    def trace(self) -> Fraction:
        return 2 * self.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    # -- exact order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(d); never touches floats."""
        sa = rational_sign(self.a)
        sb = rational_sign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # Opposite signs: |a| vs |b| sqrt(d) decided by squaring.
        lhs = self.a * self.a
        rhs = self.b * self.b * self.d
        if lhs == rhs:
            # would mean sqrt(d) rational; ruled out at construction
            raise AssertionError("non-square radicand produced a square ratio")
        return sa if lhs > rhs else sb

    def __abs__(self) -> "QuadElem":
        return -self if self.sign() < 0 else self

    def __lt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self - o).sign() >= 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                return self.is_rational() and other.is_rational() and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- display -----------------------------------------------------------

    def __float__(self) -> float:
        # display/plotting only; all decisions go through sign()
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.b > 0:
            mid, coeff = "+", self.b
        else:
            mid, coeff = "-", -self.b
        radical = f"sqrt({self.d})" if coeff == 1 else f"{coeff}*sqrt({self.d})"
        if self.a == 0:
            return radical if mid == "+" else f"-{radical}"
        return f"{self.a} {mid} {radical}"

    def __repr__(self) -> str:
        return f"QuadElem({self.a!r}, {self.b!r}, d={self.d})"


def quad_sign(x: QuadElem) -> int:
    """Exact sign of x as a real number; see :meth:`QuadElem.sign`."""
    return x.sign()


def quad_inverse(x: QuadElem) -> QuadElem:
    """Multiplicative inverse of a nonzero x; see :meth:`QuadElem.inverse`."""
    return x.inverse()

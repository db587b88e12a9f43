"""Intersection numbers on the degree-(2,...,2) family member.

The n-fold M sits in P^n x P^n as a general complete intersection of n-1
hypersurfaces of bidegree (1,1) and one of bidegree (2,2), so its class in
the ambient product is 2(H1+H2)^n.  Contracting a monomial h1^a h2^b
(a + b = n) against that class gives the closed form

    (h1^a . h2^b)_M = 2 * C(n, b),

which is precomputed per context and cross-checked against a direct expansion
of 2(H1+H2)^n once at construction.  The full pairing of n divisor classes is
a product of linear forms in (h1, h2) expanded to a homogeneous degree-n
polynomial and contracted against that table.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .divisors import DivisorClass, Scalar
from .quadfield import QuadElem, is_perfect_square


def _binomial_row(n: int) -> list[int]:
    # coefficients of (H1+H2)^n by repeated convolution with (1, 1)
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


class FamilyContext:
    """Dimension n >= 3 plus everything derived from it.

    Holds the radicand d = n^2 - 1 of the quadratic field containing the
    eigenvalues, and the multidegree table (h1^(n-b) . h2^b)_M for b in 0..n.
    Immutable; every operation in the package takes one of these.
    """

    __slots__ = ("n", "d", "multidegrees")

    def __init__(self, n: int) -> None:
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("dimension must be an integer")
        if n < 3:
            raise ValueError(f"dimension must be at least 3, got {n}")
        d = n * n - 1
        if is_perfect_square(d):
            raise AssertionError("n^2 - 1 cannot be a perfect square for n >= 3")
        table = tuple(2 * math.comb(n, b) for b in range(n + 1))
        if tuple(2 * c for c in _binomial_row(n)) != table:
            raise AssertionError("multidegree table failed its expansion self-check")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "multidegrees", table)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FamilyContext is immutable")

    def __repr__(self) -> str:
        return f"FamilyContext(n={self.n})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FamilyContext) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("FamilyContext", self.n))

    def sqrt_d(self) -> QuadElem:
        """sqrt(n^2 - 1) as an exact element of Q(sqrt(d))."""
        return QuadElem(0, 1, self.d)


def multidegree(ctx: FamilyContext, a: int, b: int) -> int:
    """Intersection number (h1^a . h2^b)_M for a + b = n."""
    if a < 0 or b < 0:
        raise ValueError("exponents must be nonnegative")
    if a + b != ctx.n:
        raise ValueError(f"wrong total degree: {a} + {b} != {ctx.n}")
    return ctx.multidegrees[b]


def pairing(ctx: FamilyContext, classes) -> Scalar:
    """Top intersection product of exactly n divisor classes.

    Expands the product of the n linear forms x_i h1 + y_i h2 into a
    homogeneous degree-n polynomial in (h1, h2) and contracts it against the
    multidegree table.  Multilinear and symmetric; exact for integer,
    rational, and quadratic coordinates (one radicand per product).
    """
    classes = list(classes)
    if len(classes) != ctx.n:
        raise ValueError(f"expected exactly {ctx.n} classes, got {len(classes)}")
    radicands = set()
    for cls in classes:
        if not isinstance(cls, DivisorClass):
            raise TypeError("pairing expects DivisorClass arguments")
        if isinstance(cls.x, QuadElem):
            radicands.add(cls.x.d)
    if len(radicands) > 1:
        raise ValueError("incompatible radicands")

    # coeffs[b] = coefficient of h1^(deg-b) h2^b, deg growing by one per factor
    coeffs: list[Scalar] = [1]
    for cls in classes:
        x, y = cls.x, cls.y
        nxt: list[Scalar] = [coeffs[0] * x]
        for b in range(1, len(coeffs)):
            nxt.append(coeffs[b] * x + coeffs[b - 1] * y)
        nxt.append(coeffs[-1] * y)
        coeffs = nxt

    total: Scalar = 0
    for b, c in enumerate(coeffs):
        total = total + c * ctx.multidegrees[b]
    return total


def ample_test_class() -> DivisorClass:
    """h1 + h2, the automorphism-invariant ample class used as default probe."""
    return DivisorClass(1, 1)

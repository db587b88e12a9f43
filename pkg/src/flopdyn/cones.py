"""Nef and movable cone tests, and reduction to nef by a word of flops.

The nef cone is the closed first quadrant, spanned by h1 and h2.  The movable
cone is spanned by the two irrational eigenrays

    v_minus = (n + sqrt(d), -1)      v_plus = (-1, n + sqrt(d))

with d = n^2 - 1.  Membership in either cone is decided by the exact signs of
two 2x2 determinants, one against each spanning ray, taken counterclockwise:
det(first ray, D) and det(D, second ray) are both positive exactly on the
interior.

Every rational class strictly inside the movable cone is carried to a nef
class by a finite alternating word in the two involutions; `reduce_to_nef`
constructs that word greedily, with the coordinate sum as an integer potential
certifying termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .divisors import KIND_QUADRATIC, DivisorClass
from .intersection import FamilyContext
from .lattice import LatticeAction, involution_matrix
from .quadfield import QuadElem, rational_sign

INTERIOR = "interior"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def _verdict_from_signs(s_first: int, s_second: int) -> str:
    if s_first < 0 or s_second < 0:
        return OUTSIDE
    if s_first > 0 and s_second > 0:
        return INTERIOR
    return BOUNDARY


@dataclass(frozen=True)
class ConeMembership:
    """Verdict plus the two determinant signs that witness it."""

    verdict: str
    witness: tuple[int, int]

    def __post_init__(self) -> None:
        expected = _verdict_from_signs(*self.witness)
        if self.verdict != expected:
            raise ValueError(f"verdict {self.verdict!r} contradicts witness {self.witness}")

    @classmethod
    def from_signs(cls, s_first: int, s_second: int) -> "ConeMembership":
        return cls(_verdict_from_signs(s_first, s_second), (s_first, s_second))


def _exact_sign(value: int | Fraction | QuadElem) -> int:
    if isinstance(value, QuadElem):
        return value.sign()
    return rational_sign(Fraction(value))


def nef_membership(ctx: FamilyContext, D: DivisorClass) -> ConeMembership:
    """Classify D against the first quadrant spanned by h1 and h2."""
    return ConeMembership.from_signs(_exact_sign(D.y), _exact_sign(D.x))


def eigenrays(ctx: FamilyContext) -> tuple[DivisorClass, DivisorClass]:
    """The spanning rays (v_minus, v_plus) of the movable cone."""
    n, d = ctx.n, ctx.d
    v_minus = DivisorClass(QuadElem(n, 1, d), QuadElem(-1, 0, d))
    v_plus = DivisorClass(QuadElem(-1, 0, d), QuadElem(n, 1, d))
    return (v_minus, v_plus)


def movable_membership(ctx: FamilyContext, D: DivisorClass) -> ConeMembership:
    """Classify D against the cone spanned by v_minus and v_plus.

    The witness signs are det(v_minus, D) = x + (n + sqrt(d)) y and
    det(D, v_plus) = (n + sqrt(d)) x + y, evaluated exactly in Q(sqrt(d)).
    """
    w = QuadElem(ctx.n, 1, ctx.d)
    det_minus = D.x + w * D.y
    det_plus = w * D.x + D.y
    return ConeMembership.from_signs(det_minus.sign(), det_plus.sign())


class FlopWord:
    """Alternating word in the two involutions, left to right in application order."""

    __slots__ = ("letters",)

    def __init__(self, letters: tuple[int, ...] = ()) -> None:
        letters = tuple(letters)
        for k in letters:
            if k not in (1, 2):
                raise ValueError(f"letters must be 1 or 2, got {k!r}")
        for a, b in zip(letters, letters[1:]):
            if a == b:
                raise ValueError("word must alternate: each involution squares to the identity")
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FlopWord is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlopWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(f"t{k}" for k in self.letters)

    def action(self, ctx: FamilyContext) -> LatticeAction:
        """Composite matrix: letters apply left to right, so the product reverses."""
        result = LatticeAction.identity()
        for k in self.letters:
            result = involution_matrix(ctx, k) @ result
        return result

    def __str__(self) -> str:
        return " ".join(self.symbols)

    def __repr__(self) -> str:
        return f"FlopWord({self.letters!r})"


@dataclass(frozen=True)
class ReductionResult:
    """Flop word carrying a movable class to the nef cone.

    ``steps`` traces the reduction: steps[0] is the primitive integer form of
    the input and steps[-1] is ``nef_class``; consecutive entries differ by
    one involution, matching ``word`` letter by letter.
    """

    word: FlopWord
    nef_class: DivisorClass
    steps: tuple[DivisorClass, ...]


def reduce_to_nef(ctx: FamilyContext, D: DivisorClass) -> ReductionResult:
    """Greedy reduction of a rational interior-movable class to a nef class.

    The input is first scaled to its primitive integer representative (the
    word only depends on the ray).  Then, while some coordinate is negative,
    the involution fixing the positive coordinate is applied: t1 when y < 0,
    t2 when x < 0.  The coordinate sum is a positive integer that strictly
    drops each step, so the loop terminates in at most x + y steps.

    Raises ValueError for the zero class, for quadratic coordinates, and for
    classes not strictly inside the movable cone.
    """
    if D.kind == KIND_QUADRATIC:
        raise ValueError("reduction requires rational coordinates")
    if D.is_zero():
        raise ValueError("cannot reduce the zero class")
    membership = movable_membership(ctx, D)
    if membership.verdict == OUTSIDE:
        raise ValueError("class not in movable interior; no flop word exists")
    # both boundary rays are irrational, so a rational class cannot sit on one
    assert membership.verdict == INTERIOR, membership

    t1, t2 = involution_matrix(ctx, 1), involution_matrix(ctx, 2)
    current = D.primitive()
    steps = [current]
    letters: list[int] = []
    while nef_membership(ctx, current).verdict == OUTSIDE:
        x, y = current.coords
        # interior movable classes miss the closed negative quadrant
        assert not (x < 0 and y < 0), current
        potential = x + y
        assert potential > 0, current
        if y < 0:
            current = t1.apply(current)
            letters.append(1)
        else:
            current = t2.apply(current)
            letters.append(2)
        assert current.x + current.y < potential, current
        steps.append(current)
    return ReductionResult(word=FlopWord(tuple(letters)),
                           nef_class=current,
                           steps=tuple(steps))

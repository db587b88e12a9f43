"""Intersection numbers on the rank-2 lattice via the multidegree table."""

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from flopdyn import (
    DivisorClass,
    FamilyContext,
    QuadElem,
    ample_test_class,
    multidegree,
    pairing,
)


def brute_pairing(ctx, classes):
    """Independent oracle: expand the product of linear forms monomial by
    monomial and contract each h1^a h2^b against the multidegree table."""
    total = 0
    for picks in itertools.product((0, 1), repeat=ctx.n):
        coeff = 1
        for cls, pick in zip(classes, picks):
            coeff *= cls.y if pick else cls.x
        b = sum(picks)
        total += coeff * multidegree(ctx, ctx.n - b, b)
    return total


class TestFamilyContext:
    def test_rejects_small_n(self):
        for bad in (0, 1, 2, -4):
            with pytest.raises(ValueError):
                FamilyContext(bad)

    def test_rejects_non_integer(self):
        with pytest.raises(TypeError):
            FamilyContext(3.5)

    def test_radicand(self):
        assert FamilyContext(3).d == 8
        assert FamilyContext(10).d == 99

    def test_immutable(self):
        ctx = FamilyContext(3)
        with pytest.raises(AttributeError):
            ctx.n = 4

    def test_sqrt_d(self):
        ctx = FamilyContext(3)
        w = ctx.sqrt_d()
        assert w == QuadElem(0, 1, 8)
        assert w * w == 8

    def test_ample_test_class(self):
        assert ample_test_class() == DivisorClass(1, 1)


class TestMultidegree:
    def test_known_values(self):
        assert multidegree(FamilyContext(5), 4, 1) == 10
        assert multidegree(FamilyContext(3), 3, 0) == 2
        assert multidegree(FamilyContext(3), 2, 1) == 6

    def test_degree_mismatch(self):
        ctx = FamilyContext(3)
        with pytest.raises(ValueError, match="wrong total degree"):
            multidegree(ctx, 1, 1)
        with pytest.raises(ValueError):
            multidegree(ctx, -1, 4)

    def test_closed_form_sweep(self):
        for n in range(3, 51):
            ctx = FamilyContext(n)
            assert multidegree(ctx, n - 1, 1) == 2 * n
            assert multidegree(ctx, n, 0) == 2
            assert multidegree(ctx, 0, n) == 2
            for b in range(n + 1):
                assert multidegree(ctx, n - b, b) == 2 * math.comb(n, b)

    def test_symmetry(self):
        for n in (3, 4, 7):
            ctx = FamilyContext(n)
            for b in range(n + 1):
                assert multidegree(ctx, n - b, b) == multidegree(ctx, b, n - b)


class TestPairing:
    def test_ample_cube(self):
        ctx = FamilyContext(3)
        h = DivisorClass(1, 1)
        assert pairing(ctx, [h, h, h]) == 40

    def test_pure_h1(self):
        ctx = FamilyContext(3)
        h1 = DivisorClass(1, 0)
        assert pairing(ctx, [h1, h1, h1]) == 2

    def test_flopped_class_negative_cube(self):
        # (6h1 - h2)^3 = 216*2 - 3*36*6 + 3*6*6 - 2 = -110
        ctx = FamilyContext(3)
        e = DivisorClass(6, -1)
        assert pairing(ctx, [e, e, e]) == -110

    def test_wrong_arity(self):
        ctx = FamilyContext(3)
        h = DivisorClass(1, 1)
        with pytest.raises(ValueError, match="expected exactly 3"):
            pairing(ctx, [h, h])
        with pytest.raises(ValueError):
            pairing(ctx, [h, h, h, h])

    def test_symmetry_under_permutation(self):
        ctx = FamilyContext(4)
        rng = random.Random(7)
        classes = [
            DivisorClass(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(4)
        ]
        base = pairing(ctx, classes)
        for _ in range(10):
            shuffled = classes[:]
            rng.shuffle(shuffled)
            assert pairing(ctx, shuffled) == base

    def test_multilinearity(self):
        ctx = FamilyContext(3)
        rng = random.Random(11)
        for _ in range(25):
            d = DivisorClass(rng.randint(-9, 9), rng.randint(-9, 9))
            e = DivisorClass(rng.randint(-9, 9), rng.randint(-9, 9))
            rest = [
                DivisorClass(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(2)
            ]
            alpha = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            beta = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            combo = alpha * d + beta * e
            assert pairing(ctx, [combo, *rest]) == alpha * pairing(
                ctx, [d, *rest]
            ) + beta * pairing(ctx, [e, *rest])

    def test_brute_force_oracle(self):
        rng = random.Random(99)
        start = time.monotonic()
        for n in (3, 4, 5, 6):
            ctx = FamilyContext(n)
            for _ in range(200):
                classes = [
                    DivisorClass(rng.randint(-9, 9), rng.randint(-9, 9))
                    for _ in range(n)
                ]
                assert pairing(ctx, classes) == brute_pairing(ctx, classes)
        assert time.monotonic() - start < 5.0

    def test_quadratic_coordinates(self):
        # pairing stays exact when coordinates live in Q(sqrt(8))
        ctx = FamilyContext(3)
        w = ctx.sqrt_d()
        v_plus = DivisorClass(QuadElem(-1, 0, 8), 3 + w)
        h = DivisorClass(1, 1)
        got = pairing(ctx, [v_plus, h, h])
        expected = brute_pairing(ctx, [v_plus, h, h])
        assert isinstance(got, QuadElem)
        assert got == expected

    def test_rejects_non_divisor_arguments(self):
        ctx = FamilyContext(3)
        with pytest.raises(TypeError):
            pairing(ctx, [(1, 1), (1, 1), (1, 1)])

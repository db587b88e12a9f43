"""Lattice automorphisms: matrices, spectra, irreducibility, powers."""

import random

import pytest

from flopdyn import (
    DivisorClass,
    FamilyContext,
    LatticeAction,
    QuadElem,
    apply_power,
    eigen_data,
    family_map,
    involution_matrix,
    is_irreducible_over_Q,
    quad_inverse,
    spectral_radius,
)

N3 = FamilyContext(3)


class TestLatticeAction:
    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError, match="determinant"):
            LatticeAction(((2, 0), (0, 1)))
        with pytest.raises(ValueError):
            LatticeAction(((1, 1), (1, 1)))

    def test_rejects_non_integer_entries(self):
        with pytest.raises(TypeError):
            LatticeAction(((1.0, 0), (0, 1)))
        with pytest.raises(TypeError):
            LatticeAction(((True, 0), (0, 1)))

    def test_trace_det(self):
        a = LatticeAction(((2, 3), (1, 2)))
        assert a.trace == 4
        assert a.det == 1

    def test_inverse_round_trip(self):
        a = LatticeAction(((2, 3), (1, 2)))
        assert a @ a.inverse() == LatticeAction.identity()
        assert a.inverse() @ a == LatticeAction.identity()

    def test_pow_matches_repeated_product(self):
        a = LatticeAction(((1, 1), (0, 1)))
        assert a**0 == LatticeAction.identity()
        assert a**3 == a @ a @ a
        assert a**-2 == (a @ a).inverse()

    def test_immutable_and_hashable(self):
        a = LatticeAction(((1, 0), (0, 1)))
        with pytest.raises(AttributeError):
            a.entries = ((0, 1), (1, 0))
        assert hash(a) == hash(LatticeAction.identity())


class TestFamilyMatrices:
    def test_involutions_n3(self):
        assert involution_matrix(N3, 1).entries == ((1, 6), (0, -1))
        assert involution_matrix(N3, 2).entries == ((-1, 0), (6, 1))

    def test_bad_involution_index(self):
        with pytest.raises(ValueError):
            involution_matrix(N3, 3)

    def test_forward_map_n3(self):
        f = family_map(N3, "forward")
        assert f.entries == ((-1, -6), (6, 35))
        assert f.trace == 34
        assert f.det == 1

    def test_forward_is_reversed_composition(self):
        # pullback contravariance: the composite t1 o t2 acts by M2 @ M1
        for n in (3, 4, 9):
            ctx = FamilyContext(n)
            m1 = involution_matrix(ctx, 1)
            m2 = involution_matrix(ctx, 2)
            assert family_map(ctx, "forward") == m2 @ m1
            assert family_map(ctx, "inverse") == m1 @ m2

    def test_bad_direction(self):
        with pytest.raises(ValueError):
            family_map(N3, "sideways")

    def test_involution_and_det_sweep(self):
        identity = LatticeAction.identity()
        for n in range(3, 101):
            ctx = FamilyContext(n)
            m1 = involution_matrix(ctx, 1)
            m2 = involution_matrix(ctx, 2)
            assert m1 @ m1 == identity
            assert m2 @ m2 == identity
            f = family_map(ctx, "forward")
            assert f.det == 1
            assert f.trace == 4 * n * n - 2
            assert f @ family_map(ctx, "inverse") == identity


class TestEigenData:
    def test_family_spectrum_n3(self):
        data = eigen_data(N3, family_map(N3))
        lam_plus, lam_minus = data.eigenvalues
        assert lam_plus == QuadElem(17, 6, 8)
        assert lam_minus == QuadElem(17, -6, 8)
        assert data.charpoly == (34, 1)
        v_plus, v_minus = data.eigenrays
        assert v_plus == DivisorClass(QuadElem(-1, 0, 8), QuadElem(3, 1, 8))
        assert v_minus == DivisorClass(QuadElem(3, 1, 8), QuadElem(-1, 0, 8))

    def test_eigen_identity_exact(self):
        # F v = lambda v, both sides expanded in Q(sqrt(d))
        for n in (3, 4):
            ctx = FamilyContext(n)
            f = family_map(ctx)
            data = eigen_data(ctx, f)
            for lam, ray in zip(data.eigenvalues, data.eigenrays):
                assert f.apply(ray) == DivisorClass(lam * ray.x, lam * ray.y)

    def test_unit_eigenvalue_product(self):
        for n in (3, 4, 10, 25):
            ctx = FamilyContext(n)
            lam_plus, lam_minus = eigen_data(ctx, family_map(ctx)).eigenvalues
            assert lam_plus * lam_minus == 1
            assert lam_plus == quad_inverse(lam_minus)
            assert lam_plus + lam_minus == 4 * n * n - 2

    def test_inverse_map_swaps_rays(self):
        fwd = eigen_data(N3, family_map(N3, "forward"))
        inv = eigen_data(N3, family_map(N3, "inverse"))
        assert inv.eigenvalues == fwd.eigenvalues
        assert inv.eigenrays == (fwd.eigenrays[1], fwd.eigenrays[0])

    def test_identity_double_root(self):
        data = eigen_data(N3, LatticeAction.identity())
        assert data.eigenvalues == (QuadElem(1, 0, 8), QuadElem(1, 0, 8))
        assert data.eigenrays is None

    def test_rational_spectrum(self):
        swap = LatticeAction(((0, 1), (1, 0)))
        data = eigen_data(N3, swap)
        assert data.eigenvalues == (QuadElem(1, 0, 8), QuadElem(-1, 0, 8))
        hi_ray, lo_ray = data.eigenrays
        assert swap.apply(hi_ray) == hi_ray
        assert swap.apply(lo_ray) == -1 * lo_ray

    def test_complex_spectrum_rejected(self):
        rot = LatticeAction(((0, -1), (1, 0)))
        with pytest.raises(ValueError, match="non-real eigenvalues"):
            eigen_data(N3, rot)

    def test_generic_irrational_spectrum_uses_own_radicand(self):
        a = LatticeAction(((2, 1), (1, 1)))  # disc = 9 - 4 = 5
        data = eigen_data(N3, a)
        lam = data.eigenvalues[0]
        assert lam.d == 5
        assert lam * data.eigenvalues[1] == a.det

    def test_spectral_radius(self):
        assert spectral_radius(N3, family_map(N3)) == QuadElem(17, 6, 8)
        assert spectral_radius(N3, LatticeAction.identity()) == 1
        rot = LatticeAction(((0, -1), (1, 0)))
        assert spectral_radius(N3, rot) == 1


class TestIrreducibility:
    def test_family_sweep(self):
        for n in range(3, 101):
            ctx = FamilyContext(n)
            assert is_irreducible_over_Q(family_map(ctx))

    def test_reducible_controls(self):
        assert not is_irreducible_over_Q(LatticeAction.identity())
        assert not is_irreducible_over_Q(LatticeAction(((0, 1), (1, 0))))
        assert not is_irreducible_over_Q(LatticeAction(((1, 1), (0, 1))))

    def test_conjugation_invariance(self):
        rng = random.Random(5)
        samples = [
            family_map(N3),
            LatticeAction(((1, 1), (0, 1))),
            LatticeAction(((2, 1), (1, 1))),
            LatticeAction(((0, 1), (1, 0))),
        ]
        for a in samples:
            for _ in range(20):
                # random unimodular G built from shears and a swap
                g = LatticeAction.identity()
                for _ in range(4):
                    s = rng.randint(-3, 3)
                    g = g @ LatticeAction(((1, s), (0, 1)))
                    if rng.random() < 0.5:
                        g = g @ LatticeAction(((0, 1), (-1, 0)))
                conj = g @ a @ g.inverse()
                assert is_irreducible_over_Q(conj) == is_irreducible_over_Q(a)


class TestApplyPower:
    def test_single_step_n3(self):
        f = family_map(N3)
        assert apply_power(f, 1, DivisorClass(1, 1)) == DivisorClass(-7, 41)

    def test_zero_power(self):
        f = family_map(N3)
        d = DivisorClass(4, -9)
        assert apply_power(f, 0, d) == d

    def test_inverse_round_trip(self):
        f = family_map(N3)
        assert apply_power(f, -1, DivisorClass(-7, 41)) == DivisorClass(1, 1)

    def test_group_law(self):
        f = family_map(N3)
        rng = random.Random(3)
        d = DivisorClass(2, 5)
        for _ in range(30):
            j, k = rng.randint(-8, 8), rng.randint(-8, 8)
            assert apply_power(f, j + k, d) == apply_power(
                f, j, apply_power(f, k, d)
            )

    def test_growth_is_big_integer_safe(self):
        f = family_map(N3)
        d = apply_power(f, 64, DivisorClass(1, 1))
        # entries around lambda^64 ~ 10^98; exactness means the inverse returns
        assert apply_power(f, -64, d) == DivisorClass(1, 1)

"""Dynamical degree: exact value, growth estimators, ray convergence."""

import math
from decimal import Decimal
from fractions import Fraction

import pytest

from flopdyn import (
    DivisorClass,
    FamilyContext,
    QuadElem,
    degree_estimators,
    dyn_degree_exact,
    eigen_data,
    family_map,
    quad_sign,
    ray_convergence,
)

N3 = FamilyContext(3)


def matrix_orbit_pairings(ctx, k_max):
    """Independent oracle for P_k at H = (1, 1): iterate the raw matrix and
    contract against the constant (h1 . H^(n-1)) = (h2 . H^(n-1)), expanded
    directly from the binomial multidegrees."""
    n = ctx.n
    row = sum(math.comb(n - 1, b) * 2 * math.comb(n, b) for b in range(n))
    (a, b), (c, d) = family_map(ctx).entries
    x, y = 1, 1
    values = []
    for _ in range(k_max + 1):
        values.append(row * (x + y))
        x, y = a * x + b * y, c * x + d * y
    return values


class TestExactDegree:
    def test_closed_form(self):
        assert dyn_degree_exact(N3) == QuadElem(17, 6, 8)
        assert dyn_degree_exact(FamilyContext(4)) == QuadElem(31, 8, 15)

    def test_matches_spectral_top(self):
        for n in range(3, 30):
            ctx = FamilyContext(n)
            data = eigen_data(ctx, family_map(ctx))
            assert dyn_degree_exact(ctx) == data.eigenvalues[0]

    def test_exceeds_one(self):
        for n in range(3, 101):
            ctx = FamilyContext(n)
            assert quad_sign(dyn_degree_exact(ctx) - 1) == 1


class TestDegreeEstimators:
    def test_first_pairings_n3(self):
        table = degree_estimators(N3, k_max=3)
        assert table.pairings() == (40, 680, 23080, 784040)

    def test_matrix_oracle(self):
        for n in (3, 4, 5):
            ctx = FamilyContext(n)
            table = degree_estimators(ctx, k_max=12)
            assert list(table.pairings()) == matrix_orbit_pairings(ctx, 12)

    def test_pullback_classes_recorded(self):
        table = degree_estimators(N3, k_max=2)
        assert table.rows[0].pullback == DivisorClass(1, 1)
        assert table.rows[1].pullback == DivisorClass(-7, 41)

    def test_ratio_estimator_close(self):
        table = degree_estimators(N3, k_max=3)
        lam = float(dyn_degree_exact(N3))
        t2 = float(Decimal(table.rows[2].t))
        assert t2 == pytest.approx(784040 / 23080)
        assert abs(t2 - lam) < 3e-5

    def test_ratio_error_envelope_exact(self):
        # |t_k / lam - 1| <= 100 lam^(1-2k), entirely in Q(sqrt(d))
        for n in (3, 4, 5):
            ctx = FamilyContext(n)
            lam = dyn_degree_exact(ctx)
            table = degree_estimators(ctx, k_max=8)
            for k in range(1, 8):
                t_k = table.t_exact(k)
                err = abs(QuadElem(t_k, 0, ctx.d) / lam - 1)
                bound = 100 * lam ** (1 - 2 * k)
                assert quad_sign(bound - err) > 0

    def test_root_estimator_trend(self):
        # |log s_k - log lam| <= (log P0 + 5) / k for k >= 2
        for n in (3, 4, 5):
            ctx = FamilyContext(n)
            lam = math.log(float(dyn_degree_exact(ctx)))
            table = degree_estimators(ctx, k_max=30)
            p0 = table.rows[0].P
            for k in range(2, 31):
                s_k = float(Decimal(table.rows[k].s))
                assert abs(math.log(s_k) - lam) <= (math.log(p0) + 5) / k

    def test_positivity_to_fifty(self):
        table = degree_estimators(N3, k_max=50)
        assert all(row.P > 0 for row in table.rows)

    def test_base_case_k1(self):
        table = degree_estimators(N3, k_max=1)
        assert len(table) == 2
        assert table.rows[0].s is None
        assert table.rows[1].s == "680"  # s_1 = P_1 exactly
        assert table.rows[1].t is None  # no P_2 computed

    def test_custom_ample_class(self):
        table = degree_estimators(N3, H=DivisorClass(2, 1), k_max=2)
        h = DivisorClass(2, 1)
        from flopdyn import pairing

        assert table.rows[0].P == pairing(N3, (h, h, h))

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError, match="nonzero nef class"):
            degree_estimators(N3, H=DivisorClass(0, 0), k_max=3)
        with pytest.raises(ValueError, match="nonzero nef class"):
            degree_estimators(N3, H=DivisorClass(-1, 5), k_max=3)
        with pytest.raises(ValueError, match="k_max"):
            degree_estimators(N3, k_max=0)

    def test_precision_controls_display(self):
        t5 = degree_estimators(N3, k_max=2, precision=5).rows[1].t
        t20 = degree_estimators(N3, k_max=2, precision=20).rows[1].t
        assert len(t20) > len(t5)
        assert float(Decimal(t5)) == pytest.approx(float(Decimal(t20)), abs=1e-3)


class TestRayConvergence:
    def test_forward_slopes_n3(self):
        trace = ray_convergence(N3, DivisorClass(1, 1), k_max=2)
        assert trace.rows[0].slope == 1
        assert trace.rows[1].cls == DivisorClass(-7, 41)
        assert trace.rows[1].slope == Fraction(41, -7)
        assert trace.rows[2].slope == Fraction(1393, -239)
        assert trace.target_slope == QuadElem(-3, -1, 8)
        assert float(trace.rows[2].slope) == pytest.approx(-5.8285, abs=1e-4)

    def test_forward_distance_small_by_k5(self):
        trace = ray_convergence(N3, DivisorClass(1, 1), k_max=5)
        assert float(trace.rows[5].distance) < 1e-6

    def test_backward_first_step(self):
        trace = ray_convergence(N3, DivisorClass(1, 1), k_max=1, direction="backward")
        assert trace.rows[1].cls == DivisorClass(41, -7)
        assert float(trace.rows[1].slope) == pytest.approx(-0.1707, abs=1e-4)
        assert trace.target_slope == QuadElem(-3, 1, 8)
        assert float(trace.target_slope) == pytest.approx(-0.1716, abs=1e-4)

    def test_distances_strictly_decreasing(self):
        for direction in ("forward", "backward"):
            trace = ray_convergence(N3, DivisorClass(1, 1), k_max=10,
                                    direction=direction)
            dists = [row.distance for row in trace.rows[1:]]
            for a, b in zip(dists, dists[1:]):
                assert quad_sign(a - b) > 0  # exact comparison in Q(sqrt(8))

    def test_distance_exact_type(self):
        trace = ray_convergence(N3, DivisorClass(1, 1), k_max=3)
        for row in trace.rows:
            assert isinstance(row.distance, QuadElem)

    def test_boundary_start_with_zero_x(self):
        # x = 0 at k = 0 only; the chordal fallback covers that row
        trace = ray_convergence(N3, DivisorClass(0, 1), k_max=3)
        assert trace.rows[0].slope is None
        assert isinstance(trace.rows[0].distance, float)
        assert all(row.slope is not None for row in trace.rows[1:])

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError, match="nonzero nef class"):
            ray_convergence(N3, DivisorClass(0, 0), k_max=3)
        with pytest.raises(ValueError, match="nonzero nef class"):
            ray_convergence(N3, DivisorClass(-1, 5), k_max=3)
        with pytest.raises(ValueError, match="direction"):
            ray_convergence(N3, DivisorClass(1, 1), k_max=3, direction="up")

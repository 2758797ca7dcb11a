import math

import numpy as np
import pytest

from alphabwm.consistency import (UndefinedCIError, check_conditions,
                                  ci_lower_bound, ci_table, cr_upper,
                                  cv_monotonicity, cv_pair, cv_quadratic,
                                  cv_quartic_over, cv_quartic_under)
from alphabwm.model import SCALE, Fpcs, uniform_grid
from alphabwm.solver import solve_weights
from conftest import random_fpcs


class TestCvPair:
    def test_extreme_row(self):
        assert cv_pair(1, 1, 9, 9) == pytest.approx(4.0)

    def test_small_row(self):
        assert cv_pair(1, 1, 2, 2) == pytest.approx(0.5)

    def test_equal_products(self):
        assert cv_pair(3, 4, 4, 3) == 0.0

    def test_repair_identity(self):
        for args in ((1.0, 1.0, 9.0, 9.0), (2.5, 1.5, 4.0, 3.0)):
            p1, q1, p2, q2 = sorted(args[:2]) + sorted(args[2:])
            if p1 * q1 > p2 * q2:
                p1, q1, p2, q2 = p2, q2, p1, q1
            eps = cv_pair(p1, q1, p2, q2)
            assert (p1 + eps) * (q1 + eps) == pytest.approx(
                (p2 - eps) * (q2 - eps), abs=1e-10)
            assert eps < min(p2, q2)

    def test_symmetry(self):
        assert cv_pair(2, 3, 5, 4) == pytest.approx(cv_pair(5, 4, 2, 3))

    def test_domain(self):
        with pytest.raises(ValueError):
            cv_pair(0, 1, 2, 3)


class TestCvQuadratic:
    def test_extreme_row(self):
        assert cv_quadratic(9, 9, 9) == pytest.approx((19 - math.sqrt(73)) / 2)

    def test_mid_row(self):
        assert cv_quadratic(4, 4, 4) == pytest.approx((9 - math.sqrt(33)) / 2)

    def test_boundary(self):
        assert cv_quadratic(2, 3, 6) == 0.0

    def test_repair_identity(self):
        eps = cv_quadratic(5, 3, 7)
        assert (5 - eps) * (3 - eps) == pytest.approx(7 + eps, abs=1e-10)
        assert 0 < eps < 3


class TestCvQuartic:
    def test_over_extreme(self):
        assert cv_quartic_over(9, 9, 9, 9, 9, 9) == pytest.approx(5.2279, abs=1e-3)

    def test_over_small(self):
        assert cv_quartic_over(2, 2, 2, 2, 2, 2) == pytest.approx(0.4384, abs=1e-3)

    def test_over_boundary(self):
        assert cv_quartic_over(2, 2, 1, 1, 2, 2) == 0.0

    def test_under_rows(self):
        assert cv_quartic_under(1, 1, 1, 1, 2, 2) == pytest.approx(
            (-3 + math.sqrt(13)) / 2, abs=1e-9)
        assert cv_quartic_under(1, 1, 1, 1, 9, 9) == pytest.approx(
            (-3 + math.sqrt(41)) / 2, abs=1e-9)
        assert cv_quartic_under(1, 1, 1, 1, 1, 1) == 0.0

    def test_residual_certified(self):
        cases = [(3.0, 2.0, 4.0, 1.5, 2.0, 3.0), (9, 9, 9, 9, 9, 9)]
        for a, b, c, d, e, f in cases:
            x = cv_quartic_over(a, b, c, d, e, f)
            res = (a - x) * (b - x) * (c - x) * (d - x) - (e + x) * (f + x)
            assert abs(res) < 1e-10
            assert x < min(a, b, c, d)
        x = cv_quartic_under(1, 1, 1.2, 1.1, 6, 5)
        res = (1 + x) * (1 + x) * (1.2 + x) * (1.1 + x) - (6 - x) * (5 - x)
        assert abs(res) < 1e-10
        assert x < 5


class TestCvMonotonicity:
    def test_no_violation(self):
        assert cv_monotonicity((2, 2, 2), (1, 1, 1)) == 0.0

    def test_residual_and_bound(self):
        # f built from a crisp best judgment, a fuzzy to-worst judgment and a
        # crisp best-to-worst judgment decreases in alpha
        a1, a2 = 0.0, 1.0
        lhs = (1.0, 3.0 - a2, 9.0)
        rhs = (1.0, 3.0 - a1, 9.0)
        x = cv_monotonicity(lhs, rhs)
        res = ((lhs[0] + x) * (lhs[1] + x) * (lhs[2] + x)
               - (rhs[0] - x) * (rhs[1] - x) * (rhs[2] - x))
        assert abs(res) < 1e-10
        assert 0 < x <= (a2 - a1) / 2

    def test_symmetric_half_gap(self):
        # both sides meet exactly at the common half-gap perturbation
        x = cv_monotonicity((1, 2, 3), (2, 3, 4))
        res = (1 + x) * (2 + x) * (3 + x) - (2 - x) * (3 - x) * (4 - x)
        assert abs(res) < 1e-10


class TestCiLowerBound:
    def test_table_rows(self):
        assert ci_lower_bound("2") == pytest.approx(0.5, abs=1e-3)
        assert ci_lower_bound("5") == pytest.approx(2.2984, abs=1e-3)
        assert ci_lower_bound("8") == pytest.approx(4.4688, abs=1e-3)

    def test_degenerate(self):
        with pytest.raises(UndefinedCIError):
            ci_lower_bound("1")

    def test_table_complete(self):
        rows = ci_table()
        assert [r["label"] for r in rows] == list("23456789")
        by_label = {r["label"]: r for r in rows}
        assert by_label["6"]["ci_lower"] == pytest.approx(3.0, abs=1e-3)
        assert by_label["9"]["ci_lower"] == pytest.approx(5.2279, abs=1e-3)


class TestCrUpper:
    def test_first_example(self):
        out = cr_upper(1.3945, 1.0, "8")
        assert out["reported"] == pytest.approx(0.3120, abs=1e-3)
        assert out["conservative"] > out["reported"]

    def test_second_example(self):
        assert cr_upper(1.5360, 0.0625, "6")["reported"] == pytest.approx(
            0.5120, abs=1e-3)

    def test_consistent_system(self):
        assert cr_upper(0.0, 0.5, "4")["reported"] == 0.0


class TestCheckConditions:
    def test_all_ones(self, all_ones):
        report = check_conditions(all_ones, uniform_grid(5))
        assert report.consistent
        assert report.max_cv == 0.0
        assert all(v is not None for v in report.k1_profile.values())

    def test_extreme_violation(self):
        f = Fpcs(("c1", "c2", "c3"), 0, 2, ("1", "9", "9"), ("9", "9", "1"))
        report = check_conditions(f, uniform_grid(3))
        assert report.max_cv == pytest.approx(5.2279, abs=1e-3)
        assert any(v.case == 3 for v in report.violations)

    def test_first_example_lower_bound(self, example1):
        grid = uniform_grid(17)
        eps = solve_weights(example1, grid).epsilon_star
        report = check_conditions(example1, grid, eps, grid.mesh)
        assert report.max_cv <= eps + 5e-4
        assert report.ci_lower == pytest.approx(4.4688, abs=1e-3)
        assert report.cr_upper == pytest.approx(0.3120, abs=1e-3)

    def test_random_lower_bounds(self):
        rng = np.random.default_rng(42)
        grid = uniform_grid(17)
        for _ in range(25):
            f = random_fpcs(rng, n=int(rng.integers(2, 5)))
            eps = solve_weights(f, grid).epsilon_star
            report = check_conditions(f, grid)
            assert report.max_cv <= eps + 5e-4

    def test_degenerate_has_no_cr(self, all_ones):
        report = check_conditions(all_ones, uniform_grid(3), 0.0, 0.5)
        assert report.ci_lower is None
        assert report.cr_upper is None

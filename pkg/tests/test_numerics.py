import math

import mpmath
import numpy as np
import pytest

from oracles import KB, bose_mp
from thermosc.errors import DegenerateError, InsufficientSpanError, StepError
from thermosc.numerics import (
    EPS,
    bose_occupation,
    central_derivative,
    log1mexp,
    loglog_slope,
    real_positive_roots,
)


def _residual_ok(coeffs, r):
    p = sum(c * r**k for k, c in enumerate(coeffs))
    return abs(p) <= 1e-10 * max(abs(c) for c in coeffs) * max(1.0, r) ** 3


class TestRoots:
    def test_quadratic_variance_numerator(self):
        w0, a2 = 1e6, 1.1111e7
        roots = real_positive_roots(w0**2, 0.0, -a2)
        assert roots == [pytest.approx(math.sqrt(w0**2 / a2), rel=1e-14)]
        assert roots[0] == pytest.approx(300.0, rel=1e-4)

    def test_cubic_entropy_numerator(self):
        w0, a3 = 1e6, 7.4074e4
        roots = real_positive_roots(2 * w0**2, 0.0, 0.0, -a3)
        assert roots == [pytest.approx((2 * w0**2 / a3) ** (1 / 3), rel=1e-14)]
        assert roots[0] == pytest.approx(300.0, rel=1e-4)

    def test_constant_has_no_roots(self):
        assert real_positive_roots(5.0) == []

    def test_zero_polynomial(self):
        with pytest.raises(DegenerateError):
            real_positive_roots(0.0, 0.0, 0.0, 0.0)

    def test_three_real_roots(self):
        # (t-1)(t-2)(t-3)
        assert real_positive_roots(-6.0, 11.0, -6.0, 1.0) == pytest.approx([1.0, 2.0, 3.0], rel=1e-15)

    def test_negative_roots_dropped(self):
        # (t+1)(t-4)(t+7)
        assert real_positive_roots(-28.0, -25.0, 4.0, 1.0) == pytest.approx([4.0], rel=1e-15)

    def test_double_root(self):
        # (t-2)^2 (t+1)
        assert real_positive_roots(4.0, 0.0, -3.0, 1.0) == pytest.approx([2.0], rel=1e-9)

    def test_zero_root_excluded(self):
        # t (t - 5)
        assert real_positive_roots(0.0, -5.0, 1.0) == pytest.approx([5.0])

    def test_linear(self):
        assert real_positive_roots(1e12, -3.3333e9) == [pytest.approx(1e12 / 3.3333e9, rel=1e-15)]

    def test_extreme_scale(self):
        # omega0^2 ~ 1e18 against a tiny cubic coefficient
        roots = real_positive_roots(1e18, 0.0, 0.0, -1e-3)
        assert roots == [pytest.approx(1e7, rel=1e-14)]

    def test_random_against_sign_scan(self):
        """1000 random polynomials of degree <= 3, checked against a 1e6-point sign scan."""
        rng = np.random.default_rng(20261015)
        for trial in range(1000):
            c = rng.uniform(-1e13, 1e13, size=4)
            # randomly drop terms so lower degrees and sparse shapes appear
            c[rng.random(4) < 0.2] = 0.0
            if not c.any() or not c[1:].any():
                continue
            roots = real_positive_roots(*c)
            for r in roots:
                assert _residual_ok(c, r), (trial, c, r)
            lead = c[np.nonzero(c)[0][-1]]
            upper = 2.0 * (1.0 + np.max(np.abs(c / lead)))
            nz = np.abs(c[1:]).max()
            lower = 0.5 * abs(c[0]) / (abs(c[0]) + nz) if c[0] != 0 else 1e-12
            t = np.geomspace(lower, upper, 1_000_000)
            vals = c[0] + t * (c[1] + t * (c[2] + t * c[3]))
            flips = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
            assert len(flips) == len(roots), (trial, c, roots, t[flips])
            for i, r in zip(flips, roots):
                assert t[i] * (1 - 1e-12) <= r <= t[i + 1] * (1 + 1e-12), (trial, c, r)


class TestCentralDerivative:
    def test_polynomial(self):
        d = central_derivative(lambda t: t * t, 3.0)
        assert abs(d.value - 6.0) <= 1e-9

    def test_log_entropy_slope(self):
        d = central_derivative(lambda t: KB * (1.0 + math.log(t)), 300.0, (0.0, math.inf))
        assert d.value == pytest.approx(KB / 300.0, rel=1e-6)

    def test_stencil_shrinks_near_edge(self):
        t_up = 300.0
        fn = lambda t: t / (1.0 - (t / t_up) ** 3)  # diverges at t_up
        far = central_derivative(fn, 100.0, (0.0, t_up))
        t = t_up * (1 - 1e-7)
        near = central_derivative(fn, t, (0.0, t_up))
        assert math.isfinite(near.value) and near.value > 0
        assert near.error / abs(near.value) > far.error / abs(far.value)

    def test_no_room(self):
        with pytest.raises(StepError):
            central_derivative(lambda t: t, 1.0, (1.0, 2.0))
        with pytest.raises(StepError):
            central_derivative(lambda t: t, 2.0 - 1e-16 * 2, (0.0, 2.0))

    def test_error_estimate_bounds_true_error(self):
        """Estimate bounds the true error in >= 99% of random smooth cases."""
        rng = np.random.default_rng(7)
        families = [
            (lambda a, b: (lambda t: math.exp(a * t) + b), lambda a, b: (lambda t: a * math.exp(a * t))),
            (lambda a, b: (lambda t: math.sin(a * t) + b), lambda a, b: (lambda t: a * math.cos(a * t))),
            (lambda a, b: (lambda t: b * math.log(a * t)), lambda a, b: (lambda t: b / t)),
            (lambda a, b: (lambda t: b * t**3 - a * t), lambda a, b: (lambda t: 3 * b * t * t - a)),
            (lambda a, b: (lambda t: b / (1.0 + a * t * t)), lambda a, b: (lambda t: -2 * a * b * t / (1 + a * t * t) ** 2)),
        ]
        trials = ok = 0
        for f_make, d_make in families:
            for _ in range(400):
                a, b = rng.uniform(0.1, 3.0), rng.uniform(-5.0, 5.0)
                t = rng.uniform(0.2, 5.0)
                fn, dfn = f_make(a, b), d_make(a, b)
                d = central_derivative(fn, t, (0.0, math.inf))
                trials += 1
                ok += abs(d.value - dfn(t)) <= d.error
        assert ok / trials >= 0.99


class TestLogLogSlope:
    x = np.geomspace(1.0, 100.0, 20)

    def test_inverse(self):
        assert abs(loglog_slope(self.x, 3.0 / self.x) + 1.0) <= 1e-12

    def test_inverse_square(self):
        assert abs(loglog_slope(self.x, 3.0 / self.x**2) + 2.0) <= 1e-12

    def test_too_few_points(self):
        with pytest.raises(InsufficientSpanError):
            loglog_slope(self.x[:7], self.x[:7])

    def test_too_narrow(self):
        x = np.linspace(1.0, 9.0, 20)
        with pytest.raises(InsufficientSpanError):
            loglog_slope(x, x)

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            loglog_slope(self.x, -self.x)


class TestBosePrimitives:
    @pytest.mark.parametrize("x", np.geomspace(1e-30, 700.0, 200))
    def test_occupation_identity(self, x):
        assert abs(bose_occupation(x) * math.expm1(x) - 1.0) <= 1e-12

    @pytest.mark.parametrize("x", [1e-28, 2.546e-8, 0.3, 1.0, 50.0, 300.0, 710.0])
    def test_occupation_against_mpmath(self, x):
        assert bose_occupation(x) == pytest.approx(float(bose_mp(x)), rel=1e-14)

    def test_large_x_underflows_to_zero(self):
        assert bose_occupation(800.0) == 0.0

    @pytest.mark.parametrize("x", [1e-30, 1e-8, 0.1, 0.69, 0.7, 3.0, 40.0, 700.0])
    def test_log1mexp(self, x):
        with mpmath.workdps(400):
            ref = float(mpmath.log(-mpmath.expm1(-mpmath.mpf(x))))
        assert log1mexp(x) == pytest.approx(ref, rel=4 * EPS, abs=1e-320)

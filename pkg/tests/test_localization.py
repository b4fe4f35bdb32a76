import math

import numpy as np
import pytest

from conftest import T_REF, W0
from oracles import KB, golden_section_max
from thermosc.entropy import entropy_classical
from thermosc.errors import DomainError
from thermosc.localization import (
    AsymptoteKind,
    dvar_dt_classical,
    variance_asymptote,
    variance_extremum,
)
from thermosc.model import FrequencyModel
from thermosc.numerics import central_derivative, loglog_slope
from thermosc.thermal import var_x_classical


class TestVarianceSlope:
    def test_constant(self, constant, si):
        assert dvar_dt_classical(constant, si, 77.0) == pytest.approx(KB / W0**2, rel=1e-15)

    def test_zero_at_quadratic_peak(self, quad_pos, si):
        assert abs(dvar_dt_classical(quad_pos, si, 300.0)) <= 1e-14 * KB / W0**2

    @pytest.mark.parametrize("a1", [3.3333e9, -3.3333e9])
    def test_linear_always_positive(self, si, a1):
        model = FrequencyModel(W0, a1=a1)
        t_hi = min(1e7, 0.999999 * model.domain.t_upper)
        assert all(dvar_dt_classical(model, si, t) > 0 for t in np.geomspace(1e-3, t_hi, 500))

    def test_outside_domain(self, cubic_neg, si):
        with pytest.raises(DomainError):
            dvar_dt_classical(cubic_neg, si, 300.0)

    @pytest.mark.parametrize("fixture", ["constant", "lin_pos", "quad_pos", "cubic_pos", "cubic_neg"])
    def test_matches_finite_difference(self, request, si, fixture):
        model = request.getfixturevalue(fixture)
        for t in np.geomspace(1.0, min(3e4, 0.98 * model.domain.t_upper), 40):
            d = dvar_dt_classical(model, si, t)
            v = var_x_classical(model, si, t)
            if abs(t * d) < 1e-3 * v:
                continue  # too flat for a central difference to resolve
            fd = central_derivative(lambda s: var_x_classical(model, si, s), t, (0.0, model.domain.t_upper))
            assert d == pytest.approx(fd.value, rel=1e-6)


class TestVarianceExtremum:
    def test_quadratic(self, quad_pos, si):
        e = variance_extremum(quad_pos, si)
        assert e.T_max == pytest.approx(300.0, rel=1e-12)
        assert e.var_max == pytest.approx(KB / (2 * math.sqrt(quad_pos.a2 * W0**2)), rel=1e-12)
        assert e.var_max == pytest.approx(2.071e-33, rel=1e-3)
        ref = golden_section_max(lambda t: var_x_classical(quad_pos, si, t), 10.0, 1e4)
        assert e.T_max == pytest.approx(ref, rel=1e-6)
        assert e.var_approx == pytest.approx(e.var_max, rel=1e-12)

    def test_quadratic_with_linear_term(self, si):
        model = FrequencyModel(W0, a1=W0**2 / T_REF, a2=W0**2 / T_REF**2)
        e = variance_extremum(model, si)
        # a1 leaves T_max alone and lowers the peak as in k_B/(a1 + 2 sqrt(a2) omega0)
        assert e.T_max == pytest.approx(300.0, rel=1e-12)
        assert e.var_max == pytest.approx(KB / (model.a1 + 2 * math.sqrt(model.a2) * W0), rel=1e-12)

    def test_linear_has_none(self, lin_pos, constant, si):
        assert variance_extremum(lin_pos, si) is None
        assert variance_extremum(constant, si) is None

    def test_cubic(self, si):
        model = FrequencyModel(W0, a3=2 * W0**2 / T_REF**3)
        e = variance_extremum(model, si)
        expected = (W0**2 / (2 * model.a3)) ** (1 / 3)
        assert e.T_max == pytest.approx(expected, rel=1e-12)
        assert e.T_max == pytest.approx(189.0, abs=0.05)
        assert e.T_approx == pytest.approx(e.T_max, rel=1e-12)

    def test_cubic_with_quadratic_term(self, si):
        model = FrequencyModel(W0, a2=W0**2 / T_REF**2, a3=W0**2 / T_REF**3)
        e = variance_extremum(model, si)
        ref = golden_section_max(lambda t: var_x_classical(model, si, t), 1.0, 1e4)
        assert e.T_max == pytest.approx(ref, rel=1e-6)
        assert e.T_max < e.T_approx

    def test_multiple_extrema_flagged(self, si):
        # omega0^2 - a2 T^2 - 2 a3 T^3 = 1 - 3.3 T^2 + 2 T^3 has two positive roots
        model = FrequencyModel(1.0, a2=3.3, a3=-1.0)
        e = variance_extremum(model, si)
        assert e.multiple_extrema
        assert 0.6 < e.T_max < 0.8

    def test_global_bound(self, si):
        for model in (
            FrequencyModel(W0, a2=W0**2 / T_REF**2),
            FrequencyModel(W0, a1=W0**2 / T_REF, a2=W0**2 / T_REF**2),
            FrequencyModel(W0, a3=W0**2 / T_REF**3),
        ):
            e = variance_extremum(model, si)
            v = np.array([var_x_classical(model, si, t) for t in np.geomspace(1e-3, 1e7, 10_000)])
            assert v.max() <= e.var_max * (1 + 4e-16)


class TestAsymptotes:
    def test_classes(self, constant, lin_pos, quad_pos, cubic_pos, cubic_neg, si):
        assert variance_asymptote(constant, si).kind is AsymptoteKind.LINEAR_GROWTH
        sat = variance_asymptote(lin_pos, si)
        assert sat.kind is AsymptoteKind.SATURATES
        assert sat.value == pytest.approx(KB / lin_pos.a1, rel=1e-15)
        assert variance_asymptote(quad_pos, si).kind is AsymptoteKind.DECAYS_INVERSE_T
        assert variance_asymptote(cubic_pos, si).kind is AsymptoteKind.DECAYS_INVERSE_T2
        div = variance_asymptote(cubic_neg, si)
        assert div.kind is AsymptoteKind.DIVERGES_AT
        assert div.value == pytest.approx(300.0, rel=1e-12)

    def test_saturation_value(self, si):
        model = FrequencyModel(W0, a1=3.3333e9)
        assert variance_asymptote(model, si).value == pytest.approx(4.142e-33, rel=1e-3)

    @pytest.mark.parametrize("fixture,slope", [("quad_pos", -1.0), ("cubic_pos", -2.0)])
    def test_decay_slopes(self, request, si, fixture, slope):
        model = request.getfixturevalue(fixture)
        t_max = variance_extremum(model, si).T_max
        ts = np.geomspace(10 * t_max, 100 * t_max, 50)
        fit = loglog_slope(ts, [var_x_classical(model, si, t) for t in ts])
        assert abs(fit - slope) <= 0.02

    def test_cubic_peak_scaling(self, si):
        a3 = W0**2 / T_REF**3
        v1 = variance_extremum(FrequencyModel(W0, a3=a3), si).var_max
        v8 = variance_extremum(FrequencyModel(8 * W0, a3=a3), si).var_max
        assert v8 / v1 == pytest.approx(8 ** (-4 / 3), rel=1e-12)

    @pytest.mark.parametrize("coeffs", [{"a1": -(W0**2) / T_REF}, {"a2": -(W0**2) / T_REF**2}, {"a3": -(W0**2) / T_REF**3}])
    def test_divergence_monotone(self, si, coeffs):
        model = FrequencyModel(W0, **coeffs)
        t_up = model.domain.t_upper
        assert t_up == pytest.approx(300.0, rel=1e-12)
        ts = np.linspace(0.9 * t_up, t_up * (1 - 1e-9), 2000)
        v = np.array([var_x_classical(model, si, t) for t in ts])
        s = np.array([entropy_classical(model, si, t) for t in ts])
        assert np.all(np.diff(v) > 0) and np.all(np.diff(s) > 0)
        assert v[-1] > 1e8 * v[0]

"""Classical-limit analysis of the position variance kB*T/omega(T)^2.

Thermal localization means the variance falls as the bath gets hotter; it
needs a quadratic or cubic shift with a positive leading coefficient.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .model import FrequencyModel, UnitSystem, omega_squared, roots_in_domain
from .thermal import var_x_classical


def dvar_dt_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    """kB*(omega0^2 - a2*T^2 - 2*a3*T^3) / omega^4; a1 cancels out."""
    w2 = omega_squared(model, T)
    num = model.omega0**2 - T * T * (model.a2 + 2.0 * model.a3 * T)
    return units.kB * num / (w2 * w2)


@dataclass(frozen=True)
class VarianceExtremum:
    T_max: float
    var_max: float
    T_approx: float | None
    var_approx: float | None
    multiple_extrema: bool = False


def variance_extremum(model: FrequencyModel, units: UnitSystem) -> VarianceExtremum | None:
    """Smallest positive zero of the variance slope inside the validity domain.

    ``T_approx``/``var_approx`` carry the textbook estimates: the exact
    quadratic result for order 2 and the a2-free cube root for order 3.
    """
    roots = roots_in_domain(model, model.omega0**2, 0.0, -model.a2, -2.0 * model.a3)
    if not roots:
        return None
    t_max = roots[0]
    t_approx = v_approx = None
    if model.order == 2 and model.a2 > 0.0:
        t_approx = math.sqrt(model.omega0**2 / model.a2)
        v_approx = units.kB / (model.a1 + 2.0 * math.sqrt(model.a2 * model.omega0**2))
    elif model.order == 3 and model.a3 > 0.0:
        t_approx = (model.omega0**2 / (2.0 * model.a3)) ** (1.0 / 3.0)
        if t_approx in model.domain:
            v_approx = var_x_classical(model, units, t_approx)
    return VarianceExtremum(
        T_max=t_max,
        var_max=var_x_classical(model, units, t_max),
        T_approx=t_approx,
        var_approx=v_approx,
        multiple_extrema=len(roots) > 1,
    )


class AsymptoteKind(str, enum.Enum):
    LINEAR_GROWTH = "LinearGrowth"
    SATURATES = "Saturates"
    DECAYS_INVERSE_T = "DecaysInverseT"
    DECAYS_INVERSE_T2 = "DecaysInverseT2"
    DIVERGES_AT = "DivergesAt"


@dataclass(frozen=True)
class AsymptoteClass:
    kind: AsymptoteKind
    value: float | None = None  # saturation variance (m^2) or divergence temperature (K)


def variance_asymptote(model: FrequencyModel, units: UnitSystem) -> AsymptoteClass:
    """High-temperature behaviour of the classical variance, decided symbolically."""
    if model.domain.bounded:
        return AsymptoteClass(AsymptoteKind.DIVERGES_AT, model.domain.t_upper)
    order = model.order
    if order == 0:
        return AsymptoteClass(AsymptoteKind.LINEAR_GROWTH)
    if order == 1:
        return AsymptoteClass(AsymptoteKind.SATURATES, units.kB / model.a1)
    if order == 2:
        return AsymptoteClass(AsymptoteKind.DECAYS_INVERSE_T)
    return AsymptoteClass(AsymptoteKind.DECAYS_INVERSE_T2)

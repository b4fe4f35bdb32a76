"""Von Neumann entropy of the thermal state and its classical-limit analysis."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, RegimeError
from .model import FrequencyModel, UnitSystem, omega_squared, roots_in_domain
from .numerics import log1mexp
from .thermal import ThermalPoint, classicality, var_p_classical, var_x_classical

#: classicality x above which the position/momentum split is refused
CLASSICAL_X_MAX = 1e-3


def entropy_exact(p: ThermalPoint, units: UnitSystem) -> float:
    """kB*[x<n> - ln(1 - e^-x)], the entropy of geometric level populations."""
    return units.kB * (p.x * p.n_mean - log1mexp(p.x))


def entropy_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    return units.kB * (1.0 - math.log(classicality(model, units, T)))


def ds_dt_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    if not T > 0.0:
        raise DomainError("the classical entropy slope is singular at T = 0")
    w2 = omega_squared(model, T)
    num = 2.0 * model.omega0**2 + T * (model.a1 - model.a3 * T * T)
    return units.kB * num / (2.0 * T * w2)


def entropy_saturation(model: FrequencyModel, units: UnitSystem) -> float | None:
    """High-temperature plateau of the classical entropy for a quadratic shift."""
    if model.order != 2 or model.a2 <= 0.0:
        return None
    return units.kB * (1.0 - math.log(units.hbar * math.sqrt(model.a2) / units.kB))


@dataclass(frozen=True)
class EntropyExtremum:
    T_max: float
    S_max: float
    T_approx: float | None  # cbrt(2 omega0^2 / a3), valid when a1 << a3 T^2
    S_approx: float | None  # closed-form maximum without the sqrt(3)/2^(1/3) factor
    multiple_extrema: bool = False


def entropy_extremum(model: FrequencyModel, units: UnitSystem) -> EntropyExtremum | None:
    """First zero of the classical entropy slope inside the validity domain."""
    roots = roots_in_domain(model, 2.0 * model.omega0**2, model.a1, 0.0, -model.a3)
    if not roots:
        return None
    t_max = roots[0]
    t_approx = s_approx = None
    if model.a3 > 0.0:
        t_approx = (2.0 * model.omega0**2 / model.a3) ** (1.0 / 3.0)
        scale = units.hbar * (model.a3 * model.omega0) ** (1.0 / 3.0) / units.kB
        s_approx = units.kB * (1.0 - math.log(scale))
    return EntropyExtremum(
        T_max=t_max,
        S_max=entropy_classical(model, units, t_max),
        T_approx=t_approx,
        S_approx=s_approx,
        multiple_extrema=len(roots) > 1,
    )


def entropy_split(model: FrequencyModel, units: UnitSystem, T: float) -> tuple[float, float]:
    """Position and momentum parts (S_X, S_P) of the classical entropy.

    The phase-space offset -(kB/2) ln(2 pi hbar) is carried by each part so
    that S_X + S_P reproduces ``entropy_classical``.
    """
    x = classicality(model, units, T)
    if x > CLASSICAL_X_MAX:
        raise RegimeError(f"entropy split needs the classical regime x <= {CLASSICAL_X_MAX}, got x={x:.3g}")
    two_pi_e = 2.0 * math.pi * math.e
    offset = math.log(2.0 * math.pi * units.hbar)
    s_x = 0.5 * units.kB * (math.log(two_pi_e * var_x_classical(model, units, T)) - offset)
    s_p = 0.5 * units.kB * (math.log(two_pi_e * var_p_classical(units, T)) - offset)
    return s_x, s_p


"""Entropic, internal-energy and HMF-energy capacities.

Classical-branch capacities are closed rational functions of T because the
frequency shift is a cubic polynomial.  The exact branch differentiates the
quantum closed forms numerically.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .entropy import CLASSICAL_X_MAX, entropy_exact
from .errors import DomainError, RegimeError
from .model import FrequencyModel, UnitSystem, d2f_dT2, df_dT, omega_squared
from .numerics import central_derivative
from .thermal import (
    classicality,
    internal_energy,
    mean_energy,
    thermal_point,
    var_x_classical,
)
from .localization import dvar_dt_classical


class Branch(str, enum.Enum):
    CLASSICAL = "ClassicalAnalytic"
    EXACT = "ExactNumeric"


class Route(str, enum.Enum):
    DIRECT = "Direct"
    VIA_CS = "ViaCS"


def _require_positive(T: float) -> None:
    if not T > 0.0:
        raise DomainError(f"capacities need T > 0, got {T!r}")


def _derivative(model: FrequencyModel, fn, T: float) -> float:
    return central_derivative(fn, T, (0.0, model.domain.t_upper)).value


def c_s(model: FrequencyModel, units: UnitSystem, T: float, branch: Branch = Branch.CLASSICAL) -> float:
    """Entropic capacity T dS/dT."""
    _require_positive(T)
    if branch is Branch.CLASSICAL:
        w2 = omega_squared(model, T)
        num = 2.0 * model.omega0**2 + T * (model.a1 - model.a3 * T * T)
        return units.kB * num / (2.0 * w2)

    def s(t):
        return entropy_exact(thermal_point(model, units, t), units)

    return T * _derivative(model, s, T)


def _c_u_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    # d/dT [kB*T - kB*T^2 f'/(2 w^2)]
    w2 = omega_squared(model, T)
    fp = df_dT(model, T)
    fpp = d2f_dT2(model, T)
    return units.kB * (1.0 - T * fp / w2 - 0.5 * T * T * fpp / w2 + 0.5 * (T * fp / w2) ** 2)


def c_u(
    model: FrequencyModel,
    units: UnitSystem,
    T: float,
    route: Route = Route.DIRECT,
    branch: Branch = Branch.CLASSICAL,
) -> float:
    """Heat capacity dU/dT, either directly or as d/dT[T*C_S]."""
    _require_positive(T)
    if route is Route.VIA_CS:
        return _derivative(model, lambda t: t * c_s(model, units, t, branch), T)
    if branch is Branch.CLASSICAL:
        return _c_u_classical(model, units, T)
    return _derivative(model, lambda t: internal_energy(model, units, t), T)


def c_h(model: FrequencyModel, units: UnitSystem, T: float, branch: Branch = Branch.CLASSICAL) -> float:
    """d<H>/dT; identically kB in the classical limit."""
    _require_positive(T)
    if branch is Branch.CLASSICAL:
        omega_squared(model, T)  # domain check
        return units.kB
    return _derivative(model, lambda t: mean_energy(thermal_point(model, units, t), units), T)


def _require_classical(model: FrequencyModel, units: UnitSystem, T: float) -> None:
    x = classicality(model, units, T)
    if x > CLASSICAL_X_MAX:
        raise RegimeError(f"needs the classical regime x <= {CLASSICAL_X_MAX}, got x={x:.3g}")


def c_var_x(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    """Position-uncertainty coefficient T dVar_X/dT (m^2)."""
    _require_positive(T)
    _require_classical(model, units, T)
    return T * dvar_dt_classical(model, units, T)


def c_s_split(model: FrequencyModel, units: UnitSystem, T: float) -> tuple[float, float]:
    """(C_SX, C_SP) with C_SX = (kB/2) C_VarX / Var_X and C_SP = kB/2."""
    cv = c_var_x(model, units, T)
    return 0.5 * units.kB * cv / var_x_classical(model, units, T), 0.5 * units.kB


@dataclass(frozen=True)
class CapacityPoint:
    T: float
    c_s: float
    c_u: float
    c_h: float
    c_var_x: float | None
    c_sx: float | None  # None on the exact branch: the split needs a factorised density
    c_sp: float | None
    branch: Branch


def capacity_point(
    model: FrequencyModel, units: UnitSystem, T: float, branch: Branch = Branch.CLASSICAL
) -> CapacityPoint:
    cs = c_s(model, units, T, branch)
    cu = c_u(model, units, T, Route.DIRECT, branch)
    ch = c_h(model, units, T, branch)
    if branch is Branch.CLASSICAL:
        cv = c_var_x(model, units, T)
        csx, csp = c_s_split(model, units, T)
    else:
        cv = csx = csp = None
    return CapacityPoint(T, cs, cu, ch, cv, csx, csp, branch)


@dataclass(frozen=True)
class WitnessReport:
    c_s_negative: bool
    c_u_negative: bool
    first_T_c_s: float | None
    first_T_c_u: float | None
    note: str = (
        "negative C_S or C_U certifies strong coupling; it needs a shift of order >= 2, "
        "a linear shift never produces it"
    )


def strong_coupling_witness(model: FrequencyModel, units: UnitSystem, t_grid: Iterable[float]) -> WitnessReport:
    """Scan the classical capacities for negative values."""
    first_s = first_u = None
    for T in t_grid:
        if first_s is None and c_s(model, units, T) < 0.0:
            first_s = T
        if first_u is None and c_u(model, units, T) < 0.0:
            first_u = T
        if first_s is not None and first_u is not None:
            break
    return WitnessReport(first_s is not None, first_u is not None, first_s, first_u)

"""Per-temperature statistics of the Gibbs state of the mean-force oscillator.

All variances are for unit mass.  Exact (quantum) and classical-limit forms
are both exposed; nothing here switches between them automatically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .model import FrequencyModel, UnitSystem, domega_dT, omega, omega_squared
from .numerics import bose_occupation


@dataclass(frozen=True)
class ThermalPoint:
    T: float
    omega: float
    x: float  # hbar*omega / (kB*T)
    n_mean: float


def classicality(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    return units.hbar * omega(model, T) / (units.kB * T)


def thermal_point(model: FrequencyModel, units: UnitSystem, T: float) -> ThermalPoint:
    if not T > 0.0:
        raise DomainError(f"thermal state needs T > 0, got {T!r}")
    w = omega(model, T)
    x = units.hbar * w / (units.kB * T)
    return ThermalPoint(T=T, omega=w, x=x, n_mean=bose_occupation(x))


def var_x_exact(p: ThermalPoint, units: UnitSystem) -> float:
    """Position variance (hbar/omega)(<n> + 1/2), m^2."""
    return units.hbar / p.omega * (p.n_mean + 0.5)


def var_p_exact(p: ThermalPoint, units: UnitSystem) -> float:
    """Momentum variance hbar*omega*(<n> + 1/2)."""
    return units.hbar * p.omega * (p.n_mean + 0.5)


def var_x_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    return units.kB * T / omega_squared(model, T)


def var_p_classical(units: UnitSystem, T: float) -> float:
    return units.kB * T


def mean_energy(p: ThermalPoint, units: UnitSystem) -> float:
    """Mean of the mean-force Hamiltonian, hbar*omega*(<n> + 1/2), J."""
    return units.hbar * p.omega * (p.n_mean + 0.5)


def internal_energy(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    """U = <H> - T <dH/dT> = hbar*(omega - T*omega')*(<n> + 1/2)."""
    p = thermal_point(model, units, T)
    return units.hbar * (p.omega - T * domega_dT(model, T)) * (p.n_mean + 0.5)


def internal_energy_classical(model: FrequencyModel, units: UnitSystem, T: float) -> float:
    """High-temperature form kB*T*(1 - T*omega'/omega)."""
    ratio = T * domega_dT(model, T) / omega(model, T)
    return units.kB * T * (1.0 - ratio)

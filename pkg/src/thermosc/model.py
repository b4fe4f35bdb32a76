"""Physical constants and the temperature-dependent frequency model.

The squared mode frequency is ``omega(T)**2 = omega0**2 + f(T)`` with a
frequency shift ``f(T) = a1*T + a2*T**2 + a3*T**3``.  The model is only
meaningful while ``omega**2 > 0``; the first positive root of ``omega**2``
closes the validity domain.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError
from .numerics import real_positive_roots

HBAR_SI = 1.054571817e-34  # J s
KB_SI = 1.380649e-23  # J / K


class UnitMode(str, enum.Enum):
    SI = "si"
    REDUCED = "reduced"


@dataclass(frozen=True)
class UnitSystem:
    hbar: float = HBAR_SI
    kB: float = KB_SI
    mode: UnitMode = UnitMode.SI

    def __post_init__(self):
        if not (self.hbar > 0 and self.kB > 0):
            raise ValueError("hbar and kB must be positive")
        if self.mode is UnitMode.REDUCED and (self.hbar != 1.0 or self.kB != 1.0):
            raise ValueError("reduced units require hbar = kB = 1")

    @classmethod
    def si(cls) -> UnitSystem:
        return cls()

    @classmethod
    def reduced(cls) -> UnitSystem:
        return cls(hbar=1.0, kB=1.0, mode=UnitMode.REDUCED)


SI = UnitSystem.si()
REDUCED = UnitSystem.reduced()


@dataclass(frozen=True)
class ValidityDomain:
    """Temperatures ``0 <= T < t_upper`` where the potential is confining."""

    t_upper: float = math.inf

    def __contains__(self, T: float) -> bool:
        return 0.0 <= T < self.t_upper

    @property
    def bounded(self) -> bool:
        return math.isfinite(self.t_upper)


@dataclass(frozen=True)
class FrequencyModel:
    """Bare frequency ``omega0`` (rad/s) and shift coefficients a1..a3."""

    omega0: float
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0

    def __post_init__(self):
        if not self.omega0 > 0:
            raise ValueError(f"omega0 must be positive, got {self.omega0!r}")
        for name in ("a1", "a2", "a3"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)

    @property
    def order(self) -> int:
        """Largest k with a_k != 0 (0 for a constant frequency)."""
        for k in (3, 2, 1):
            if self.coefficients[k - 1] != 0.0:
                return k
        return 0

    @property
    def leading_coefficient(self) -> float:
        k = self.order
        return self.coefficients[k - 1] if k else 0.0

    @cached_property
    def domain(self) -> ValidityDomain:
        return validity_domain(self)


def f_of_T(model: FrequencyModel, T: float) -> float:
    """Frequency shift a1*T + a2*T^2 + a3*T^3 (rad^2/s^2), in Horner form."""
    return T * (model.a1 + T * (model.a2 + T * model.a3))


def df_dT(model: FrequencyModel, T: float) -> float:
    return model.a1 + T * (2.0 * model.a2 + T * 3.0 * model.a3)


def d2f_dT2(model: FrequencyModel, T: float) -> float:
    return 2.0 * model.a2 + 6.0 * model.a3 * T


def _check_domain(model: FrequencyModel, T: float) -> None:
    if not T >= 0.0:
        raise DomainError(f"temperature must be non-negative, got {T!r}")
    if T >= model.domain.t_upper:
        raise DomainError(
            f"T={T!r} K is at or beyond the collapse temperature t_upper={model.domain.t_upper!r} K"
        )


def omega_squared(model: FrequencyModel, T: float) -> float:
    _check_domain(model, T)
    w2 = model.omega0 * model.omega0 + f_of_T(model, T)
    if not w2 > 0.0:
        raise DomainError(f"omega^2 = {w2!r} <= 0 at T={T!r} K")
    if w2 == math.inf:
        raise DomainError(f"omega^2 overflows at T={T!r} K")
    return w2


def omega(model: FrequencyModel, T: float) -> float:
    """Mode frequency sqrt(omega0^2 + f(T)) in rad/s."""
    w2 = omega_squared(model, T)
    if T == 0.0:
        return model.omega0
    return math.sqrt(w2)


def domega_dT(model: FrequencyModel, T: float) -> float:
    """dω/dT = f'(T) / (2ω)."""
    return df_dT(model, T) / (2.0 * omega(model, T))


def validity_domain(model: FrequencyModel) -> ValidityDomain:
    if model.order == 0 or min(model.coefficients) >= 0.0:
        return ValidityDomain()
    roots = real_positive_roots(model.omega0**2, model.a1, model.a2, model.a3)
    return ValidityDomain(roots[0] if roots else math.inf)


def roots_in_domain(model: FrequencyModel, *coeffs: float) -> list[float]:
    """Positive roots of a polynomial in T that lie inside the validity domain."""
    return [t for t in real_positive_roots(*coeffs) if t in model.domain]

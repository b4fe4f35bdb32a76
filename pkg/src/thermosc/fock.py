"""Brute-force Gibbs state in a truncated Fock basis.

Used as an independent check on the closed forms: level populations are
summed explicitly instead of using the geometric-series identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError
from .model import UnitSystem
from .numerics import log1mexp


@dataclass(frozen=True, eq=False)
class FockEnsemble:
    n_max: int
    p: np.ndarray  # populations p_0 .. p_{n_max}, renormalised on the truncated space
    log_p: np.ndarray
    z: float  # truncated partition sum, energies measured in units of kB*T
    x: float
    tail_mass: float  # weight beyond n_max in the untruncated distribution


def build_ensemble(x: float, eps_tail: float = 1e-16, n_cap: int = 1_000_000) -> FockEnsemble:
    if not x > 0.0:
        raise ValueError(f"x must be positive, got {x!r}")
    if not 0.0 < eps_tail < 1e-3:
        raise ValueError(f"eps_tail must lie in (0, 1e-3), got {eps_tail!r}")
    if n_cap < 16:
        raise ValueError("n_cap must be at least 16")
    needed = math.ceil(-math.log(eps_tail) / x)
    if needed > n_cap:
        raise TruncationError(
            f"x={x:.3g} needs {needed} Fock levels for tail {eps_tail:.1e}, cap is {n_cap}"
        )
    n = np.arange(needed + 1, dtype=float)
    # log p_n = -n x + ln(1 - e^-x) - ln(1 - e^-(N+1)x)
    log_norm = log1mexp((needed + 1) * x)
    log_p = -n * x + log1mexp(x) - log_norm
    p = np.exp(log_p)
    # mop up exp rounding so the truncated populations sum to one; log_p stays
    # analytic, since shifting it by ln(total) would swamp a near-zero entropy
    p /= math.fsum(p)
    p.flags.writeable = False
    log_p.flags.writeable = False
    z = math.fsum(np.exp(-(n + 0.5) * x))
    return FockEnsemble(needed, p, log_p, z, x, math.exp(-(needed + 1) * x))


@dataclass(frozen=True)
class OracleMoments:
    mean_n: float
    var_x: float
    var_p: float
    mean_energy: float
    entropy: float


def oracle_moments(e: FockEnsemble, omega: float, units: UnitSystem) -> OracleMoments:
    """Moments of the diagonal Gibbs state, summed level by level with fsum.

    <X^2> and <P^2> follow from the ladder-operator matrix elements
    <n|(a + a^dag)^2|n> = 2n + 1; both first moments vanish.
    """
    n = np.arange(e.n_max + 1, dtype=float)
    mean_n = math.fsum(n * e.p)
    two_n_plus_one = math.fsum((2.0 * n + 1.0) * e.p)
    return OracleMoments(
        mean_n=mean_n,
        var_x=units.hbar / (2.0 * omega) * two_n_plus_one,
        var_p=units.hbar * omega / 2.0 * two_n_plus_one,
        mean_energy=units.hbar * omega * math.fsum((n + 0.5) * e.p),
        entropy=-units.kB * math.fsum(e.p * e.log_p),
    )

"""Equilibrium thermodynamics of a harmonic oscillator whose frequency depends on temperature.

The squared frequency omega(T)^2 = omega0^2 + a1 T + a2 T^2 + a3 T^3 models a
mode strongly coupled to its bath through a Hamiltonian of mean force.
"""

from .capacities import (
    Branch,
    CapacityPoint,
    Route,
    WitnessReport,
    c_h,
    c_s,
    c_s_split,
    c_u,
    c_var_x,
    capacity_point,
    strong_coupling_witness,
)
from .config import SweepConfig, figure_preset, load_config
from .entropy import (
    ds_dt_classical,
    entropy_classical,
    entropy_exact,
    entropy_extremum,
    entropy_saturation,
    entropy_split,
)
from .errors import (
    ConfigError,
    DegenerateError,
    DomainError,
    InsufficientSpanError,
    RegimeError,
    StepError,
    TruncationError,
)
from .fock import FockEnsemble, build_ensemble, oracle_moments
from .localization import AsymptoteClass, AsymptoteKind, dvar_dt_classical, variance_asymptote, variance_extremum
from .model import (
    REDUCED,
    SI,
    FrequencyModel,
    UnitSystem,
    ValidityDomain,
    domega_dT,
    f_of_T,
    omega,
    validity_domain,
)
from .sweep import SweepTable, emit_csv, run_sweep
from .thermal import (
    ThermalPoint,
    internal_energy,
    mean_energy,
    thermal_point,
    var_p_classical,
    var_p_exact,
    var_x_classical,
    var_x_exact,
)

__version__ = "0.1.0"

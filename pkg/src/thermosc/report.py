"""Regime reports and the invariant-checking ``validate`` command."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from .capacities import Route, WitnessReport, c_s, c_s_split, c_u, strong_coupling_witness
from .config import SweepConfig
from .entropy import (
    CLASSICAL_X_MAX,
    ds_dt_classical,
    entropy_classical,
    entropy_exact,
    entropy_extremum,
    entropy_saturation,
)
from .fock import build_ensemble, oracle_moments
from .localization import dvar_dt_classical, variance_asymptote, variance_extremum
from .model import REDUCED, FrequencyModel, UnitSystem, domega_dT, f_of_T, omega
from .numerics import EPS, central_derivative
from .thermal import (
    ThermalPoint,
    mean_energy,
    thermal_point,
    var_p_exact,
    var_x_classical,
    var_x_exact,
)

log = logging.getLogger(__name__)

ORACLE_X_VALUES = (0.05, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0)


def _gap(value: float, approx: float | None) -> float | None:
    if approx is None:
        return None
    return abs(value - approx) / abs(value) if value != 0.0 else abs(approx)


def _record(t_max, value, t_approx, approx, multiple, kB=None) -> dict:
    rec = {
        "T_max": t_max,
        "value": value,
        "T_approx": t_approx,
        "analytic_approx": approx,
        "relative_gap": _gap(value, approx),
        "multiple_extrema": multiple,
    }
    if kB is not None:
        rec["value_over_kB"] = value / kB
        rec["analytic_approx_over_kB"] = None if approx is None else approx / kB
    return rec


@dataclass(frozen=True)
class RegimeReport:
    model: FrequencyModel
    units: UnitSystem
    asymptote: dict
    variance_max: dict | None
    entropy_max: dict | None
    entropy_plateau: dict | None
    t_upper: float | None
    witness: WitnessReport

    def to_dict(self) -> dict:
        m = self.model
        return {
            "model": {"omega0": m.omega0, "a1": m.a1, "a2": m.a2, "a3": m.a3, "order": m.order},
            "units": {"mode": self.units.mode.value, "hbar": self.units.hbar, "kB": self.units.kB},
            "regime": {
                "asymptote": self.asymptote,
                "localization": self.variance_max is not None,
                "purification": self.entropy_max is not None,
            },
            "extrema": {
                "variance": self.variance_max,
                "entropy": self.entropy_max,
                "entropy_saturation": self.entropy_plateau,
            },
            "divergence": {"t_upper": self.t_upper},
            "witness": {
                "c_s_negative": self.witness.c_s_negative,
                "c_u_negative": self.witness.c_u_negative,
                "first_T_c_s": self.witness.first_T_c_s,
                "first_T_c_u": self.witness.first_T_c_u,
                "note": self.witness.note,
            },
        }


def default_grid(model: FrequencyModel, points: int = 1000) -> np.ndarray:
    t_hi = 3e4 if not model.domain.bounded else 0.999 * model.domain.t_upper
    return np.geomspace(min(1.0, t_hi / 10.0), t_hi, points)


def build_report(model: FrequencyModel, units: UnitSystem, t_grid: Iterable[float] | None = None) -> RegimeReport:
    kB = units.kB
    grid = default_grid(model) if t_grid is None else np.asarray(list(t_grid), dtype=float)
    asym = variance_asymptote(model, units)

    vmax = variance_extremum(model, units)
    var_rec = None if vmax is None else _record(
        vmax.T_max, vmax.var_max, vmax.T_approx, vmax.var_approx, vmax.multiple_extrema
    )
    smax = entropy_extremum(model, units)
    s_rec = None if smax is None else _record(
        smax.T_max, smax.S_max, smax.T_approx, smax.S_approx, smax.multiple_extrema, kB
    )
    plateau = entropy_saturation(model, units)
    plateau_rec = None
    if plateau is not None:
        # numeric plateau: classical entropy deep in the a2*T^2 >> omega0^2 regime
        t_deep = 1e4 * model.omega0 / math.sqrt(model.a2)
        plateau_rec = _record(None, entropy_classical(model, units, t_deep), None, plateau, False, kB)

    return RegimeReport(
        model=model,
        units=units,
        asymptote={"kind": asym.kind.value, "value": asym.value},
        variance_max=var_rec,
        entropy_max=s_rec,
        entropy_plateau=plateau_rec,
        t_upper=model.domain.t_upper if model.domain.bounded else None,
        witness=strong_coupling_witness(model, units, (float(t) for t in grid)),
    )


def emit_report(model: FrequencyModel, units: UnitSystem, path: str | Path, t_grid=None) -> RegimeReport:
    report = build_report(model, units, t_grid)
    Path(path).write_text(json.dumps(report.to_dict(), indent=2) + "\n", encoding="utf-8")
    return report


# -- validate --------------------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def _worst(values: Iterable[float]) -> float:
    return max(values, default=0.0)


def _fd_points(model: FrequencyModel, grid: np.ndarray) -> list[float]:
    # interior points whose stencil keeps well clear of a collapse temperature.
    # Slope checks below also skip points where the relative slope T*g'/g is
    # under 1e-3: there a central difference only resolves rounding noise.
    t_up = model.domain.t_upper
    return [float(t) for t in grid if t < 0.99 * t_up]


def run_checks(model: FrequencyModel, units: UnitSystem, grid: np.ndarray) -> list[Check]:
    kB, hbar = units.kB, units.hbar
    grid = [float(t) for t in grid]
    points: list[ThermalPoint] = [thermal_point(model, units, t) for t in grid]
    checks: list[Check] = []

    def add(name: str, worst: float, tol: float, detail: str = "") -> None:
        checks.append(Check(name, worst <= tol, f"worst={worst:.3e} tol={tol:.1e} {detail}".strip()))

    w0sq = model.omega0**2
    add(
        "omega^2 - f = omega0^2 (ulps of the largest term)",
        _worst(
            abs(omega(model, t) ** 2 - f_of_T(model, t) - w0sq)
            / math.ulp(max(omega(model, t) ** 2, abs(f_of_T(model, t)), w0sq))
            for t in grid
        ),
        4.0,
    )
    fd = _fd_points(model, np.asarray(grid))
    add(
        "domega/dT vs central difference",
        _worst(
            _rel(domega_dT(model, t), central_derivative(lambda s: omega(model, s), t, (0.0, model.domain.t_upper)).value)
            for t in fd
            if abs(t * domega_dT(model, t)) > 1e-3 * omega(model, t)
        ),
        1e-6,
    )
    add(
        "n_mean * expm1(x) = 1",
        _worst(abs(p.n_mean * math.expm1(p.x) - 1.0) for p in points if p.x <= 700.0),
        1e-12,
    )
    add(
        "Heisenberg: Var_X Var_P >= hbar^2/4",
        _worst(max(0.0, 1.0 - var_x_exact(p, units) * var_p_exact(p, units) / (hbar * hbar / 4.0)) for p in points),
        4.0 * EPS,
    )
    add(
        "<H> = omega^2 Var_X = Var_P",
        _worst(
            max(
                _rel(mean_energy(p, units), p.omega**2 * var_x_exact(p, units)),
                _rel(mean_energy(p, units), var_p_exact(p, units)),
            )
            for p in points
        ),
        1e-12,
    )
    # below x ~ 1e-7 the x^2/12 bound drops under one ulp of S; allow rounding there
    add(
        "|S_exact - S_classical| <= kB x^2/12 (x <= 0.1)",
        _worst(
            abs(entropy_exact(p, units) - entropy_classical(model, units, p.T))
            / (kB * p.x**2 / 12.0 + 16.0 * EPS * abs(entropy_exact(p, units)))
            for p in points
            if p.x <= 0.1
        ),
        1.0,
        "(ratio to bound)",
    )
    add(
        "dS/dT (classical) vs central difference",
        _worst(
            _rel(
                ds_dt_classical(model, units, t),
                central_derivative(lambda s: entropy_classical(model, units, s), t, (0.0, model.domain.t_upper)).value,
            )
            for t in fd
            if abs(ds_dt_classical(model, units, t)) > 1e-3 * kB / t
        ),
        1e-6,
    )
    add(
        "dVar_X/dT (classical) vs central difference",
        _worst(
            _rel(
                dvar_dt_classical(model, units, t),
                central_derivative(lambda s: var_x_classical(model, units, s), t, (0.0, model.domain.t_upper)).value,
            )
            for t in fd
            if abs(t * dvar_dt_classical(model, units, t)) > 1e-3 * var_x_classical(model, units, t)
        ),
        1e-6,
    )
    add(
        "C_U direct vs d/dT[T C_S]",
        _worst(
            abs(c_u(model, units, t) - c_u(model, units, t, Route.VIA_CS)) / max(kB, abs(c_u(model, units, t)))
            for t in fd
        ),
        1e-6,
    )
    classical = [p for p in points if p.x <= CLASSICAL_X_MAX]
    add(
        "C_SX + C_SP = C_S",
        _worst(
            abs(sum(c_s_split(model, units, p.T)) - c_s(model, units, p.T)) / max(kB, abs(c_s(model, units, p.T)))
            for p in classical
        ),
        1e-12,
    )
    vmax = variance_extremum(model, units)
    if vmax is not None:
        add(
            "Var_X never exceeds its maximum",
            _worst(var_x_classical(model, units, t) / vmax.var_max - 1.0 for t in grid),
            4.0 * EPS,
        )
    worst = 0.0
    for x in ORACLE_X_VALUES:
        p = ThermalPoint(1.0 / x, 1.0, x, 1.0 / math.expm1(x))
        om = oracle_moments(build_ensemble(x), 1.0, REDUCED)
        worst = max(
            worst,
            _rel(om.mean_n, p.n_mean),
            _rel(om.var_x, var_x_exact(p, REDUCED)),
            _rel(om.var_p, var_p_exact(p, REDUCED)),
            _rel(om.mean_energy, mean_energy(p, REDUCED)),
            _rel(om.entropy, entropy_exact(p, REDUCED)),
        )
    add("Fock oracle matches closed forms", worst, 1e-12)
    return checks


def validate(cfg: SweepConfig, echo: Callable[[str], None] = print) -> int:
    """Run the invariant suite on the configured model and grid; 0 if all pass, 3 otherwise."""
    checks = run_checks(cfg.model, cfg.units, cfg.grid())
    for c in checks:
        echo(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
    failed = [c for c in checks if not c.passed]
    if failed:
        log.warning("%d of %d checks failed", len(failed), len(checks))
        return 3
    return 0

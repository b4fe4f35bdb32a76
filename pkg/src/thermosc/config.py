"""Sweep configuration: JSON schema, validation, canonical dump and figure presets."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import numpy as np

from .errors import ConfigError, DomainError
from .model import HBAR_SI, KB_SI, FrequencyModel, UnitMode, UnitSystem

COLUMNS = (
    "T_K",
    "omega_rad_s",
    "x",
    "n_mean",
    "varX_exact_m2",
    "varX_classical_m2",
    "varP_exact",
    "S_exact_over_kB",
    "S_classical_over_kB",
    "C_S_over_kB",
    "C_U_over_kB",
    "C_H_over_kB",
    "C_varX_m2",
)

SPACINGS = ("log", "linear")

_TOP_KEYS = {"model", "units", "sweep", "columns", "oracle"}
_MODEL_KEYS = {"omega0", "a1", "a2", "a3"}
_UNIT_KEYS = {"mode", "hbar", "kB"}
_SWEEP_KEYS = {"t_min", "t_max", "points", "spacing"}
_ORACLE_KEYS = {"eps_tail", "n_cap"}


@dataclass(frozen=True)
class OracleSettings:
    eps_tail: float = 1e-16
    n_cap: int = 1_000_000


@dataclass(frozen=True)
class SweepConfig:
    model: FrequencyModel
    units: UnitSystem
    t_min: float
    t_max: float
    points: int
    spacing: str = "log"
    columns: tuple[str, ...] = COLUMNS
    oracle: OracleSettings = field(default_factory=OracleSettings)

    def grid(self) -> np.ndarray:
        if self.spacing == "log":
            g = np.geomspace(self.t_min, self.t_max, self.points)
        else:
            g = np.linspace(self.t_min, self.t_max, self.points)
        # pin the endpoints; geomspace can be off by an ulp
        g[0], g[-1] = self.t_min, self.t_max
        return g


def _number(section: str, key: str, value: Any, *, positive: bool = False) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{section}.{key}: expected a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ConfigError(f"{section}.{key}: must be finite")
    if positive and not v > 0:
        raise ConfigError(f"{section}.{key}: must be positive, got {v!r}")
    return v


def _section(raw: dict, name: str, allowed: set[str], required: bool = False) -> dict:
    sec = raw.get(name)
    if sec is None:
        if required:
            raise ConfigError(f"{name}: section is required")
        return {}
    if not isinstance(sec, dict):
        raise ConfigError(f"{name}: expected an object")
    for key in sec:
        if key not in allowed:
            if name == "model" and key.startswith("a") and key[1:].isdigit():
                raise ConfigError(f"model.{key}: frequency shift order is limited to Ω ≤ 3 (a1..a3)")
            raise ConfigError(f"{name}.{key}: unknown key")
    return sec


def config_from_dict(raw: dict) -> SweepConfig:
    """Validate a parsed JSON document and fill defaults."""
    if not isinstance(raw, dict):
        raise ConfigError("config: top level must be an object")
    for key in raw:
        if key not in _TOP_KEYS:
            raise ConfigError(f"{key}: unknown top-level key")

    m = _section(raw, "model", _MODEL_KEYS, required=True)
    if "omega0" not in m:
        raise ConfigError("model.omega0: required")
    model = FrequencyModel(
        omega0=_number("model", "omega0", m["omega0"], positive=True),
        **{k: _number("model", k, m[k]) for k in ("a1", "a2", "a3") if k in m},
    )

    u = _section(raw, "units", _UNIT_KEYS)
    mode_name = str(u.get("mode", "si")).lower()
    try:
        mode = UnitMode(mode_name)
    except ValueError:
        raise ConfigError(f"units.mode: expected 'si' or 'reduced', got {u.get('mode')!r}") from None
    default = 1.0 if mode is UnitMode.REDUCED else None
    hbar = _number("units", "hbar", u["hbar"], positive=True) if "hbar" in u else (default or HBAR_SI)
    kB = _number("units", "kB", u["kB"], positive=True) if "kB" in u else (default or KB_SI)
    if mode is UnitMode.REDUCED and (hbar != 1.0 or kB != 1.0):
        raise ConfigError("units.hbar: reduced mode fixes hbar = kB = 1")
    units = UnitSystem(hbar=hbar, kB=kB, mode=mode)

    s = _section(raw, "sweep", _SWEEP_KEYS, required=True)
    for key in ("t_min", "t_max", "points"):
        if key not in s:
            raise ConfigError(f"sweep.{key}: required")
    t_min = _number("sweep", "t_min", s["t_min"], positive=True)
    t_max = _number("sweep", "t_max", s["t_max"], positive=True)
    if not t_min < t_max:
        raise ConfigError("sweep.t_max: must exceed sweep.t_min")
    points = s["points"]
    if isinstance(points, bool) or not isinstance(points, int) or points < 2:
        raise ConfigError(f"sweep.points: expected an integer >= 2, got {points!r}")
    spacing = s.get("spacing", "log")
    if spacing not in SPACINGS:
        raise ConfigError(f"sweep.spacing: expected one of {SPACINGS}, got {spacing!r}")

    columns = raw.get("columns", list(COLUMNS))
    if not isinstance(columns, list):
        raise ConfigError("columns: expected a list of column names")
    for c in columns:
        if c not in COLUMNS:
            raise ConfigError(f"columns: unknown column {c!r}")
    if len(set(columns)) != len(columns):
        raise ConfigError("columns: duplicate entries")

    o = _section(raw, "oracle", _ORACLE_KEYS)
    eps_tail = _number("oracle", "eps_tail", o["eps_tail"], positive=True) if "eps_tail" in o else 1e-16
    if not eps_tail < 1e-3:
        raise ConfigError("oracle.eps_tail: must be below 1e-3")
    n_cap = o.get("n_cap", 1_000_000)
    if isinstance(n_cap, bool) or not isinstance(n_cap, int) or n_cap < 16:
        raise ConfigError(f"oracle.n_cap: expected an integer >= 16, got {n_cap!r}")

    if t_max >= model.domain.t_upper:
        raise DomainError(
            f"sweep.t_max={t_max!r} K reaches the collapse temperature t_upper={model.domain.t_upper!r} K"
        )
    return SweepConfig(model, units, t_min, t_max, points, spacing, tuple(columns), OracleSettings(eps_tail, n_cap))


def config_to_dict(cfg: SweepConfig) -> dict:
    m = cfg.model
    return {
        "model": {"omega0": m.omega0, "a1": m.a1, "a2": m.a2, "a3": m.a3},
        "units": {"mode": cfg.units.mode.value, "hbar": cfg.units.hbar, "kB": cfg.units.kB},
        "sweep": {"t_min": cfg.t_min, "t_max": cfg.t_max, "points": cfg.points, "spacing": cfg.spacing},
        "columns": list(cfg.columns),
        "oracle": {"eps_tail": cfg.oracle.eps_tail, "n_cap": cfg.oracle.n_cap},
    }


def dumps_config(cfg: SweepConfig) -> str:
    return json.dumps(config_to_dict(cfg), indent=2) + "\n"


def dump_config(cfg: SweepConfig, path: str | Path) -> None:
    Path(path).write_text(dumps_config(cfg), encoding="utf-8")


def load_config(path: str | Path) -> SweepConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"{path}: no such config file") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc})") from None
    return config_from_dict(raw)


# -- figure presets ------------------------------------------------------------

FIGURES = ("fig2", "fig3", "fig4")

_FIGURE_COLUMNS = {
    "fig2": (
        "T_K", "omega_rad_s", "x", "n_mean", "varX_exact_m2", "varX_classical_m2",
        "varP_exact", "S_exact_over_kB", "S_classical_over_kB",
    ),
    "fig3": ("T_K", "x", "S_exact_over_kB", "S_classical_over_kB", "C_S_over_kB", "C_varX_m2"),
    "fig4": ("T_K", "x", "C_S_over_kB", "C_U_over_kB", "C_H_over_kB"),
}

PRESET_OMEGA0 = 1e6
PRESET_T_RANGE = (1.0, 3e4)
#: a collapsing model is swept up to this fraction of its t_upper
DIVERGENT_CLIP = 0.999


def preset_models(t_ref: float = 300.0, omega0: float = PRESET_OMEGA0, divergent: bool = True) -> list[FrequencyModel]:
    """Leading-order shifts with |a_k| t_ref^k = omega0^2."""
    w2 = omega0 * omega0
    models = [
        FrequencyModel(omega0, a1=w2 / t_ref),
        FrequencyModel(omega0, a2=w2 / t_ref**2),
        FrequencyModel(omega0, a3=w2 / t_ref**3),
    ]
    if divergent:
        models.append(FrequencyModel(omega0, a3=-w2 / t_ref**3))
    return models


def figure_preset(fig_id: str, t_ref: float = 300.0, points: int = 1000) -> list[SweepConfig]:
    """Sweep configurations behind the variance, entropy-capacity and heat-capacity figures.

    fig2 carries the collapsing a3 < 0 model; fig3 and fig4 share the three
    positive-leading-coefficient models only.
    """
    if fig_id not in FIGURES:
        raise ConfigError(f"figure id must be one of {FIGURES}, got {fig_id!r}")
    t_lo, t_hi = PRESET_T_RANGE
    configs = []
    for model in preset_models(t_ref, divergent=fig_id == "fig2"):
        t_max = min(t_hi, DIVERGENT_CLIP * model.domain.t_upper)
        configs.append(
            SweepConfig(model, UnitSystem.si(), t_lo, t_max, points, "log", _FIGURE_COLUMNS[fig_id])
        )
    return configs


def model_tag(model: FrequencyModel) -> str:
    k = model.order
    if k == 0:
        return "constant"
    return f"order{k}_{'pos' if model.leading_coefficient > 0 else 'neg'}"


def with_units(cfg: SweepConfig, units: UnitSystem) -> SweepConfig:
    return replace(cfg, units=units)

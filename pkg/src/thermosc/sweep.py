"""Temperature sweeps and CSV emission."""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .capacities import c_s, c_u
from .config import COLUMNS, SweepConfig
from .entropy import entropy_classical, entropy_exact
from .localization import dvar_dt_classical
from .model import FrequencyModel, UnitSystem
from .thermal import thermal_point, var_p_exact, var_x_classical, var_x_exact


@dataclass(frozen=True, eq=False)
class SweepTable:
    columns: tuple[str, ...]
    data: np.ndarray  # shape (rows, len(columns))

    def column(self, name: str) -> np.ndarray:
        return self.data[:, self.columns.index(name)]

    def __len__(self) -> int:
        return self.data.shape[0]


def sweep_row(model: FrequencyModel, units: UnitSystem, T: float) -> tuple[float, ...]:
    """All table quantities at one temperature, in the order of ``COLUMNS``.

    Capacities use the classical closed forms; C_varX is reported from the
    classical variance slope at every temperature.
    """
    kB = units.kB
    p = thermal_point(model, units, T)
    return (
        T,
        p.omega,
        p.x,
        p.n_mean,
        var_x_exact(p, units),
        var_x_classical(model, units, T),
        var_p_exact(p, units),
        entropy_exact(p, units) / kB,
        entropy_classical(model, units, T) / kB,
        c_s(model, units, T) / kB,
        c_u(model, units, T) / kB,
        1.0,  # classical C_H is exactly kB
        T * dvar_dt_classical(model, units, T),
    )


def run_sweep(cfg: SweepConfig, workers: int = 1) -> SweepTable:
    """Evaluate every grid temperature; row order never depends on ``workers``."""
    grid = [float(t) for t in cfg.grid()]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda t: sweep_row(cfg.model, cfg.units, t), grid))
    else:
        rows = [sweep_row(cfg.model, cfg.units, t) for t in grid]
    full = np.array(rows, dtype=float).reshape(len(rows), len(COLUMNS))
    idx = [COLUMNS.index(c) for c in cfg.columns]
    return SweepTable(tuple(cfg.columns), full[:, idx])


def format_value(v: float) -> str:
    return f"{v:.16e}"


def emit_csv(table: SweepTable, path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(table.columns)
        if not table.columns:
            return
        for row in table.data:
            writer.writerow([format_value(v) for v in row])

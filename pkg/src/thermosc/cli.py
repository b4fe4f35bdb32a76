"""Command-line entry point: ``thermosc sweep|report|figure|validate``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import FIGURES, dump_config, figure_preset, load_config, model_tag, with_units
from .errors import ConfigError, DomainError, ThermoscError
from .model import UnitSystem
from .report import emit_report, validate
from .sweep import emit_csv, run_sweep

log = logging.getLogger("thermosc")

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4


def _load(args):
    cfg = load_config(args.config)
    if args.units:
        cfg = with_units(cfg, UnitSystem.si() if args.units == "si" else UnitSystem.reduced())
    return cfg


def cmd_sweep(args) -> int:
    cfg = _load(args)
    table = run_sweep(cfg, workers=args.workers)
    emit_csv(table, args.output)
    log.info("wrote %d rows x %d columns to %s", len(table), len(table.columns), args.output)
    return EXIT_OK


def cmd_report(args) -> int:
    cfg = _load(args)
    report = emit_report(cfg.model, cfg.units, args.output, cfg.grid())
    log.info("regime %s; report written to %s", report.asymptote["kind"], args.output)
    return EXIT_OK


def _gnuplot_script(fig_id: str, tags: list[str], columns: tuple[str, ...]) -> str:
    y = columns[-1]
    ycol = columns.index(y) + 1
    lines = [
        f"# {fig_id}: {y} against temperature",
        "set datafile separator ','",
        "set key autotitle columnhead",
        "set logscale x",
        "set xlabel 'T [K]'",
        f"set ylabel '{y}'",
    ]
    plots = [f"'{fig_id}_{tag}.csv' using 1:{ycol} with lines title '{tag}'" for tag in tags]
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def cmd_figure(args) -> int:
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    tags = []
    configs = figure_preset(args.id, t_ref=args.t_ref, points=args.points)
    for cfg in configs:
        if args.units:
            cfg = with_units(cfg, UnitSystem.si() if args.units == "si" else UnitSystem.reduced())
        tag = model_tag(cfg.model)
        tags.append(tag)
        dump_config(cfg, out / f"{args.id}_{tag}.json")
        emit_csv(run_sweep(cfg), out / f"{args.id}_{tag}.csv")
    (out / f"{args.id}.gp").write_text(_gnuplot_script(args.id, tags, configs[0].columns), encoding="utf-8")
    log.info("wrote %d series for %s into %s", len(configs), args.id, out)
    return EXIT_OK


def cmd_validate(args) -> int:
    cfg = _load(args)
    echo = (lambda s: None) if args.quiet else print
    return validate(cfg, echo=echo)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--units", choices=("si", "reduced"), default=argparse.SUPPRESS,
                        help="override the unit system of the config")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="only report errors")

    parser = argparse.ArgumentParser(
        prog="thermosc",
        description="Thermodynamics of an oscillator with temperature-dependent frequency.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", parents=[common], help="tabulate quantities over a temperature grid")
    p.add_argument("-c", "--config", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("report", parents=[common], help="classify the regime and locate extrema")
    p.add_argument("-c", "--config", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("figure", parents=[common], help="write plot-ready CSVs for a figure preset")
    p.add_argument("--id", required=True, choices=FIGURES)
    p.add_argument("-o", "--output", required=True, help="output directory")
    p.add_argument("--t-ref", type=float, default=300.0, help="reference temperature for the presets (K)")
    p.add_argument("--points", type=int, default=1000)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("validate", parents=[common], help="run the invariant suite")
    p.add_argument("-c", "--config", required=True)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    args.units = getattr(args, "units", None)
    args.quiet = getattr(args, "quiet", False)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO, format="%(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        log.error("config error: %s", exc)
        return EXIT_CONFIG
    except DomainError as exc:
        log.error("domain error: %s", exc)
        return EXIT_DOMAIN
    except ThermoscError as exc:
        log.error("numerical failure: %s", exc)
        return EXIT_NUMERIC
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

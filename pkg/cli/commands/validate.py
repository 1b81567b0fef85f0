# cli/commands/validate.py
"""Monte Carlo check of the closed-form risks over a grid of parameter points."""
import argparse

from gaussian.utils import default_block_size, default_workers
from montecarlo.registry import GridRegistry, load_grid_file
from montecarlo.validation import validate_formula, write_validation_csv

from .. import EXIT_CONFIG, EXIT_FAILED, EXIT_OK
from ..manifest import RunManifest
from ..schemas import ValidateConfig, load_config, parse_config

OVERRIDES = ("preset", "grid_file", "regime", "n", "multiplier", "seed")


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("validate", parents=parents, help=__doc__)
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--preset", help="Grid preset from the grid library (e.g. default, smoke)")
    source.add_argument("--grid", dest="grid_file", help="Path to a grid JSON file")
    parser.add_argument("--regime", help="natural, adversarial or auto (adversarial when epsilon > 0)")
    parser.add_argument("--n", type=int, help="Monte Carlo samples per class")
    parser.add_argument("--multiplier", type=float, help="Pass tolerance in standard errors")
    parser.add_argument("--workers", type=int, help="Threads for Monte Carlo blocks")
    parser.add_argument("--list", action="store_true", help="List grid presets and exit")
    parser.set_defaults(handler=run)


def resolve_config(args: argparse.Namespace) -> ValidateConfig:
    data = load_config(args.config, ValidateConfig).model_dump() if args.config else {}
    for key in OVERRIDES:
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    if data.get("preset") and data.get("grid_file"):
        # a flag replaces the other source named in the config file
        if args.preset is not None:
            data["grid_file"] = None
        elif args.grid_file is not None:
            data["preset"] = None
    return parse_config(data, ValidateConfig)


def run(args: argparse.Namespace) -> int:
    registry = GridRegistry()
    if args.list:
        for name in registry.list_grids():
            grid = registry.get_grid(name)
            print(f"  {name:<12} {len(grid.points):>3} point(s)  {grid.description}")
        return EXIT_OK

    config = resolve_config(args)
    if config.preset and config.grid_file:
        print("[ERROR] Cannot use both a preset and a grid file")
        return EXIT_CONFIG
    if config.grid_file:
        grid = load_grid_file(config.grid_file)
    else:
        grid = registry.get_grid(config.preset or "default")
    if not grid.points:
        print(f"[ERROR] Grid '{grid.name}' has no points")
        return EXIT_CONFIG

    regime = config.regime or grid.regime
    print(f"Validating {len(grid.points)} point(s) of grid '{grid.name}' "
          f"(regime={regime}, n={config.n}, multiplier={config.multiplier}, seed={config.seed})...")
    reports = validate_formula(
        regime, grid.points, config.n,
        multiplier=config.multiplier, seed=config.seed,
        block_size=default_block_size(), workers=args.workers or default_workers(),
    )

    path = write_validation_csv(reports, args.out)
    resolved = config.model_copy(update={
        "preset": None if config.grid_file else (config.preset or "default"),
        "regime": regime,
    })
    RunManifest(
        command="validate",
        config=resolved.model_dump(),
        seed=config.seed,
        outputs=[path],
    ).write(path)

    failed = [r for r in reports if not r.passed]
    for index, report in enumerate(reports):
        if report.error is not None:
            print(f"  [ERROR] point {index}: {report.error}")
        elif not report.passed:
            print(f"  [WARN] point {index}: outside {config.multiplier} standard errors")
    if failed:
        print(f"[ERROR] {len(failed)}/{len(reports)} point(s) failed -> {path}")
        return EXIT_FAILED
    print(f"[OK] All {len(reports)} point(s) passed -> {path}")
    return EXIT_OK

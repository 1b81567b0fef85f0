# cli/commands/analytic.py
"""Closed-form class-wise risks of the four training regimes at one parameter point."""
import argparse
from typing import Dict, List

from analytic.risks import classwise_risk
from analytic.types import ADVERSARIAL, MIXUP, REGIMES, regime_tag
from gaussian.types import MixupSpec
from gaussian.utils import format_value, write_csv_rows
from montecarlo.types import GridPoint

from .. import EXIT_OK
from ..manifest import RunManifest
from ..schemas import load_config, parse_config

COLUMNS = ["regime", "threshold", "r_plus", "r_minus", "delta"]
POINT_FLAGS = ("d", "mu_plus", "mu_minus", "sigma_plus", "sigma_minus", "alpha", "lambda", "epsilon")


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("analytic", parents=parents, help=__doc__)
    parser.add_argument("--d", type=int)
    parser.add_argument("--mu-plus", dest="mu_plus", type=float)
    parser.add_argument("--mu-minus", dest="mu_minus", type=float)
    parser.add_argument("--sigma-plus", dest="sigma_plus", type=float)
    parser.add_argument("--sigma-minus", dest="sigma_minus", type=float)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--lambda", dest="lambda", type=float)
    parser.add_argument("--epsilon", type=float)
    parser.set_defaults(handler=run)


def resolve_point(args: argparse.Namespace) -> GridPoint:
    """Config file first, then explicit flags on top."""
    data: Dict = {}
    if args.config:
        data = load_config(args.config, GridPoint).model_dump(by_alias=True)
    for flag in POINT_FLAGS:
        value = getattr(args, flag, None)
        if value is not None:
            data[flag] = value
    return parse_config(data, GridPoint)


def analytic_rows(point: GridPoint) -> List[Dict]:
    """One row per (training, variant) regime; raises on an invalid point."""
    params = point.params()
    rows = []
    for training, variant in REGIMES:
        spec = point.spec() if variant == MIXUP else MixupSpec()
        budget = point.budget() if training == ADVERSARIAL else None
        pair = classwise_risk(params, spec, budget)
        rows.append({
            "regime": regime_tag(training, variant),
            "threshold": pair.threshold,
            "r_plus": pair.r_plus,
            "r_minus": pair.r_minus,
            "delta": pair.delta,
        })
    return rows


def run(args: argparse.Namespace) -> int:
    point = resolve_point(args)
    rows = analytic_rows(point)

    print(f"d={point.d} mu=({point.mu_plus}, {point.mu_minus}) sigma=({point.sigma_plus}, {point.sigma_minus}) "
          f"alpha={point.alpha} lambda={point.lam} epsilon={point.epsilon}")
    print(f"{'regime':<20} {'threshold':>16} {'r_plus':>16} {'r_minus':>16} {'delta':>16}")
    for row in rows:
        print(f"{row['regime']:<20} " + " ".join(f"{format_value(row[c]):>16}" for c in COLUMNS[1:]))

    if args.out:
        path = write_csv_rows(args.out, COLUMNS, rows)
        RunManifest(command="analytic", config=point.model_dump(by_alias=True), seed=None, outputs=[path]).write(path)
        print(f"[OK] Wrote {path}")
    return EXIT_OK

# cli/commands/sweep.py
"""Class-wise risks along one parameter axis, for the plain and mixup regimes."""
import argparse
import logging
from typing import Dict, List

from analytic.risks import classwise_risk
from analytic.types import ADVERSARIAL, MIXUP
from classifier.linear import from_threshold
from gaussian.errors import error_tag
from gaussian.types import MixupSpec
from gaussian.utils import default_workers, ordered_map, write_csv_rows
from montecarlo.estimator import estimate_classwise_risk
from montecarlo.types import GridPoint
from montecarlo.validation import point_seed

from .. import EXIT_CONFIG, EXIT_OK
from ..manifest import RunManifest
from ..schemas import SweepConfig, load_config, parse_config

logger = logging.getLogger(__name__)

COLUMNS = ["axis", "value", "regime", "r_plus", "r_minus", "delta", "mu_plus", "mu_minus"]
MC_COLUMNS = ["mc_plus", "mc_minus", "stderr_plus", "stderr_minus"]


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("sweep", parents=parents, help=__doc__)
    parser.add_argument("--mc-n", dest="mc_n", type=int, help="Monte Carlo samples per class (0 = analytic only)")
    parser.add_argument("--workers", type=int, help="Grid points evaluated concurrently")
    parser.set_defaults(handler=run)


def substitute(fixed: GridPoint, axis: str, value: float) -> GridPoint:
    """
    Point on the sweep axis.

    class_distance rescales both means to the new mu_+ + mu_- keeping their
    ratio, so value is the sum and the rows carry the resulting mu_+ and mu_-;
    dimension casts to int.
    """
    if axis == "class_distance":
        total = fixed.mu_plus + fixed.mu_minus
        if total == 0:
            share = 0.5
        else:
            share = fixed.mu_plus / total
        update = {"mu_plus": value * share, "mu_minus": value * (1.0 - share)}
    elif axis == "epsilon":
        update = {"epsilon": value}
    elif axis == "dimension":
        update = {"d": int(value)}
    else:
        update = {"lam": value}
    return fixed.model_copy(update=update)


def _split_regime(tag: str):
    training, variant = tag.split("_", 1)
    return training, variant


def sweep_rows(config: SweepConfig, workers: int = 1) -> List[Dict]:
    """
    Rows ordered by axis value, then by the order of config.regimes.
    Invalid points become rows with an error tag instead of numbers.
    """
    values = sorted(config.grid)

    def evaluate(job):
        index, value = job
        point = substitute(config.fixed, config.axis, value)
        rows = []
        for regime_index, tag in enumerate(config.regimes):
            training, variant = _split_regime(tag)
            row = {"axis": config.axis, "value": value, "regime": tag, "mu_plus": point.mu_plus,
                   "mu_minus": point.mu_minus}
            try:
                params = point.params()
                spec = point.spec() if variant == MIXUP else MixupSpec()
                budget = point.budget() if training == ADVERSARIAL else None
                pair = classwise_risk(params, spec, budget)
                row.update(r_plus=pair.r_plus, r_minus=pair.r_minus, delta=pair.delta)
                if config.mc_n > 0:
                    clf = from_threshold(pair.threshold, params.d)
                    seed = point_seed(point_seed(config.seed, index), regime_index)
                    plus, minus = estimate_classwise_risk(params, spec, clf, budget, config.mc_n, seed)
                    row.update(mc_plus=plus.value, mc_minus=minus.value,
                               stderr_plus=plus.stderr, stderr_minus=minus.stderr)
            except ValueError as exc:
                logger.info("sweep point %s=%s (%s) rejected: %s", config.axis, value, tag, exc)
                row["error"] = error_tag(exc)
            rows.append(row)
        return rows

    per_value = ordered_map(evaluate, list(enumerate(values)), workers=workers)
    return [row for rows in per_value for row in rows]


def sweep_columns(config: SweepConfig, rows: List[Dict]) -> List[str]:
    columns = COLUMNS + (MC_COLUMNS if config.mc_n > 0 else [])
    if any("error" in row for row in rows):
        columns.append("error")
    return columns


def run(args: argparse.Namespace) -> int:
    if not args.config:
        print("[ERROR] sweep needs --config <sweep.json>")
        return EXIT_CONFIG
    config = load_config(args.config, SweepConfig)
    updates = {}
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.mc_n is not None:
        updates["mc_n"] = args.mc_n
    if updates:
        config = parse_config({**config.model_dump(by_alias=True), **updates}, SweepConfig)

    rows = sweep_rows(config, workers=args.workers or default_workers())
    errors = sum(1 for row in rows if "error" in row)
    path = write_csv_rows(args.out, sweep_columns(config, rows), rows)
    RunManifest(command="sweep", config=config.model_dump(by_alias=True), seed=config.seed, outputs=[path]).write(path)

    print(f"[OK] {len(rows)} row(s) over {len(config.grid)} {config.axis} value(s) -> {path}")
    if errors:
        print(f"[WARN] {errors} row(s) rejected by parameter guards (see the error column)")
    return EXIT_OK


__all__ = ["add_parser", "run", "substitute", "sweep_rows", "sweep_columns", "COLUMNS", "MC_COLUMNS"]

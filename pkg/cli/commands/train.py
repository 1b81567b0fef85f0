# cli/commands/train.py
"""Train linear classifiers over several seeds and summarise held-out class-wise risks."""
import argparse
import json
from pathlib import Path
from typing import Dict, List

import numpy as np

from gaussian.sampler import sample_labeled
from gaussian.utils import write_csv_rows, write_dataset_csv
from trainer.logger import TrainingLogger
from trainer.trainer import train
from trainer.types import TrainConfig, TrainReport, class_risk_summary

from .. import EXIT_CONFIG, EXIT_OK
from ..manifest import RunManifest
from ..schemas import TrainRunConfig, load_config, parse_config

SEED_COLUMNS = ["evaluation", "threshold", "r_plus", "r_minus", "avg", "std", "min", "max", "delta"]
AGGREGATE_COLUMNS = ["regime", "evaluation", "statistic", "r_plus", "r_minus", "worst", "delta", "seeds"]
EVALUATIONS = ("natural", "adversarial")
STATISTICS = {"mean": np.mean, "std": np.std, "min": np.min, "max": np.max}


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("train", parents=parents, help=__doc__)
    parser.add_argument("--seeds", type=int, nargs="+", help="Seeds to run (overrides the config)")
    parser.add_argument("--export-data", action="store_true",
                        help="Also write each seed's sampled dataset as data_seed<k>.csv")
    parser.set_defaults(handler=run)


def train_config(run_config: TrainRunConfig, regime: str, seed: int) -> TrainConfig:
    return TrainConfig(
        epochs=run_config.epochs,
        batch_size=run_config.batch_size,
        learning_rate=run_config.learning_rate,
        lr_decay_factor=run_config.lr_decay_factor,
        lr_decay_every=run_config.lr_decay_every,
        seed=seed,
        regime=regime,
        epsilon=run_config.epsilon,
        lam=run_config.lam,
        uniform_lambda=run_config.uniform_lambda,
        optimizer=run_config.optimizer,
        momentum=run_config.momentum,
        holdout_fraction=run_config.holdout_fraction,
    )


def seed_rows(report: TrainReport) -> List[Dict]:
    rows = []
    for evaluation, pair in zip(EVALUATIONS, (report.natural, report.adversarial)):
        rows.append({
            "evaluation": evaluation,
            "threshold": pair.threshold,
            "r_plus": pair.r_plus,
            "r_minus": pair.r_minus,
            **class_risk_summary(pair),
        })
    return rows


def aggregate_rows(regime: str, reports: List[TrainReport]) -> List[Dict]:
    """mean / std / min / max over seeds of each class risk, the worst class and delta."""
    rows = []
    for evaluation in EVALUATIONS:
        pairs = [getattr(r, evaluation) for r in reports]
        columns = {
            "r_plus": np.array([p.r_plus for p in pairs]),
            "r_minus": np.array([p.r_minus for p in pairs]),
            "worst": np.array([max(p.r_plus, p.r_minus) for p in pairs]),
            "delta": np.array([p.delta for p in pairs]),
        }
        for statistic, fn in STATISTICS.items():
            row = {"regime": regime, "evaluation": evaluation, "statistic": statistic, "seeds": len(reports)}
            row.update({name: float(fn(values)) for name, values in columns.items()})
            rows.append(row)
    return rows


def run_training(run_config: TrainRunConfig, out_dir: Path) -> Dict[str, List[TrainReport]]:
    """
    Train every configured regime on every seed; writes per-seed JSON and CSV files.

    With export_data the sampled dataset of each seed is written too.
    """
    params = run_config.params()
    out_dir.mkdir(parents=True, exist_ok=True)
    results: Dict[str, List[TrainReport]] = {regime: [] for regime in run_config.regimes}
    for seed in run_config.seeds:
        data = sample_labeled(params, run_config.n, seed)
        if run_config.export_data:
            write_dataset_csv(data, out_dir / f"data_seed{seed}.csv")
        for regime in run_config.regimes:
            config = train_config(run_config, regime, seed)
            training_logger = None
            if run_config.log_epochs:
                training_logger = TrainingLogger(str(out_dir / "logs"), run_id=f"{regime}_seed{seed}")
            report = train(data, config, training_logger)
            results[regime].append(report)

            stem = out_dir / f"{regime}_seed{seed}"
            with open(f"{stem}.json", "w", encoding="utf-8") as f:
                json.dump(report.to_dict(), f, indent=2)
            write_csv_rows(f"{stem}.csv", SEED_COLUMNS, seed_rows(report))
            print(f"  [OK] {regime} seed={seed}: "
                  f"delta_nat={report.delta_nat:.6g} delta_adv={report.delta_adv:.6g}")
    return results


def run(args: argparse.Namespace) -> int:
    if not args.config:
        print("[ERROR] train needs --config <train.json>")
        return EXIT_CONFIG
    run_config = load_config(args.config, TrainRunConfig)
    if args.seeds is not None or args.seed is not None:
        seeds = args.seeds if args.seeds is not None else [args.seed]
        run_config = parse_config({**run_config.model_dump(by_alias=True), "seeds": seeds}, TrainRunConfig)
    if args.export_data:
        run_config = run_config.model_copy(update={"export_data": True})

    out_dir = Path(args.out)
    print(f"Training {len(run_config.regimes)} regime(s) x {len(run_config.seeds)} seed(s) -> {out_dir}")
    results = run_training(run_config, out_dir)

    rows = [row for regime, reports in results.items() for row in aggregate_rows(regime, reports)]
    path = write_csv_rows(out_dir / "aggregate.csv", AGGREGATE_COLUMNS, rows)
    outputs = [path] + [
        str(out_dir / f"{regime}_seed{seed}.{ext}")
        for seed in run_config.seeds for regime in run_config.regimes for ext in ("json", "csv")
    ]
    if run_config.export_data:
        outputs += [str(out_dir / f"data_seed{seed}.csv") for seed in run_config.seeds]
    RunManifest(
        command="train",
        config=run_config.model_dump(by_alias=True),
        seed=run_config.seeds[0],
        outputs=outputs,
    ).write(path)

    for row in rows:
        if row["statistic"] == "mean":
            print(f"  {row['regime']:<18} {row['evaluation']:<12} mean worst={row['worst']:.6g} "
                  f"mean delta={row['delta']:.6g}")
    print(f"[OK] Aggregate written to {path}")
    return EXIT_OK

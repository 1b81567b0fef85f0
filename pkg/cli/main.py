#!/usr/bin/env python3
"""
Command-line entry point.

Usage:
    python -m cli.main analytic --d 5 --mu-plus 0.5 --mu-minus 0.5 --alpha 0.6 --lambda 0.5 --epsilon 0.1
    python -m cli.main sweep --config configs/sweep_class_distance.json --out outputs/fig1a.csv
    python -m cli.main validate --preset default --n 1000000 --multiplier 4
    python -m cli.main train --config configs/train_benchmark.json --out outputs/train

Exit codes: 0 success, 1 validation failure, 2 configuration error, 3 I/O error.
"""
import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from dotenv import load_dotenv

from gaussian.errors import TrainingDivergedError

from . import EXIT_CONFIG, EXIT_FAILED, EXIT_IO, __version__
from .commands import COMMANDS
from .manifest import get_timestamp


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--seed", type=int, help="Seed (overrides the config)")
    common.add_argument("--out", help="Output path (default: $FAIRMIX_OUTPUT_DIR/<command>_<timestamp>)")

    parser = argparse.ArgumentParser(
        prog="python -m cli.main",
        description="Class-wise risk disparity of linear classifiers under mixup and adversarial training.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS.values():
        module.add_parser(subparsers, [common])
    return parser


def default_output(command: str) -> str:
    out_dir = Path(os.getenv("FAIRMIX_OUTPUT_DIR", "outputs"))
    name = f"{command}_{get_timestamp()}"
    return str(out_dir / (name if command == "train" else f"{name}.csv"))


def configure_logging() -> None:
    level = os.getenv("FAIRMIX_LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)

    # analytic only writes a file when asked to
    if args.out is None and args.command != "analytic":
        args.out = default_output(args.command)

    try:
        return args.handler(args)
    except TrainingDivergedError as e:
        print(f"[ERROR] {e}")
        return EXIT_FAILED
    except ValueError as e:
        print(f"[ERROR] {e}")
        return EXIT_CONFIG
    except OSError as e:
        print(f"[ERROR] I/O failure: {e}")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

from . import analytic, sweep, train, validate

COMMANDS = {
    "analytic": analytic,
    "sweep": sweep,
    "validate": validate,
    "train": train,
}

__all__ = ["COMMANDS", "analytic", "sweep", "train", "validate"]

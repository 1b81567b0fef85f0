"""Command-line harness: analytic tables, sweeps, Monte Carlo validation and training runs."""

__version__ = "0.1.0"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3

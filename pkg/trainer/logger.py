"""JSONL logger for per-epoch training records."""

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Optional


class TrainingLogger:
    """Appends one JSON line per epoch to <log_dir>/<run_id>.jsonl."""

    def __init__(self, log_dir: str = "outputs/logs/training", run_id: Optional[str] = None):
        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)
        self.run_id = run_id or datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")

    @property
    def path(self) -> Path:
        return self.log_dir / f"{self.run_id}.jsonl"

    def log_epoch(self, epoch: int, loss: float, extra: Optional[Dict[str, Any]] = None) -> None:
        entry = {
            "run_id": self.run_id,
            "epoch": epoch,
            "loss": loss,
            "logged_at": datetime.now(timezone.utc).isoformat(),
            **(extra or {}),
        }
        with open(self.path, "a", encoding="utf-8") as f:
            f.write(json.dumps(entry) + "\n")

    def read(self):
        """All entries logged so far for this run."""
        if not self.path.exists():
            return []
        with open(self.path, "r", encoding="utf-8") as f:
            return [json.loads(line) for line in f if line.strip()]

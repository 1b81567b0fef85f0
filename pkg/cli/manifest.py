# cli/manifest.py
import json
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from . import __version__


def get_timestamp() -> str:
    """
    Generate timestamp string for default output names.

    Returns:
        Timestamp in format: YYYYMMDD_HHMMSS
    """
    return datetime.now().strftime("%Y%m%d_%H%M%S")


def manifest_path(output: Union[str, Path]) -> Path:
    output = Path(output)
    return output.with_name(output.name + ".manifest.json")


@dataclass
class RunManifest:
    """
    Everything needed to reproduce one output file.

    config is the fully resolved configuration document, loadable again
    with --config for the same command.
    """
    command: str
    config: Dict[str, Any]
    seed: Optional[int]
    version: str = __version__
    timestamp: str = field(default_factory=lambda: datetime.now().isoformat())
    outputs: List[str] = field(default_factory=list)

    def write(self, output: Union[str, Path]) -> str:
        path = manifest_path(output)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(asdict(self), f, indent=2)
        return str(path)

    @classmethod
    def read(cls, path: Union[str, Path]) -> "RunManifest":
        with open(path, "r", encoding="utf-8") as f:
            return cls(**json.load(f))

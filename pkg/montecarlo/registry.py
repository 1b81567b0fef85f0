# montecarlo/registry.py
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from gaussian.errors import ParameterError

from .types import GridPoint

DEFAULT_ROOT = Path(__file__).parent / "grid_library"


@dataclass
class Grid:
    """A named list of grid points with the regime they are validated under."""
    name: str
    points: List[GridPoint]
    regime: str = "auto"
    description: str = ""
    source: Optional[str] = None
    metadata: Dict = field(default_factory=dict)


def parse_grid(data: Union[Dict, List], name: str, source: Optional[str] = None) -> Grid:
    """
    Build a Grid from a JSON document.

    Accepts either a bare list of points or an object with a "points" list.
    Invalid keys are reported with the offending point index.
    """
    if isinstance(data, list):
        data = {"points": data}
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise ParameterError(f"Grid '{name}' must be a list of points or an object with a 'points' list")
    points = []
    for index, raw in enumerate(data["points"]):
        try:
            points.append(GridPoint.model_validate(raw))
        except ValidationError as e:
            first = e.errors()[0]
            key = ".".join(str(part) for part in first["loc"])
            raise ParameterError(f"Grid '{name}' point {index}: invalid key '{key}': {first['msg']}")
    return Grid(
        name=data.get("name", name),
        points=points,
        regime=data.get("regime", "auto"),
        description=data.get("description", ""),
        source=source,
    )


def load_grid_file(path: Union[str, Path]) -> Grid:
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ParameterError(f"Grid file {path} is not valid JSON: {e}")
    return parse_grid(data, path.stem, source=str(path))


class GridRegistry:
    """
    Access to the grid preset library.
    Each preset is a JSON file <root>/<name>.json.
    """

    def __init__(self, root: Union[str, Path] = DEFAULT_ROOT):
        self.root = Path(root)
        self._cache: Dict[str, Grid] = {}

    def get_grid(self, name: str) -> Grid:
        """
        Load a preset by name.
        Raises ParameterError if the preset does not exist.
        """
        if name in self._cache:
            return self._cache[name]

        path = self.root / f"{name}.json"
        if not path.exists():
            raise ParameterError(
                f"Grid preset not found: {name} (available: {', '.join(self.list_grids()) or 'none'})"
            )
        grid = load_grid_file(path)
        self._cache[name] = grid
        return grid

    def list_grids(self) -> List[str]:
        """
        List available preset names.
        Returns empty list if the library directory doesn't exist.
        """
        if not self.root.exists():
            return []
        return sorted(p.stem for p in self.root.glob("*.json"))

    def validate_grid(self, name: str) -> bool:
        """Check if a preset exists without loading it."""
        return (self.root / f"{name}.json").exists()

# cli/csv_io.py
"""Reading back the CSVs the harness emits."""
import csv
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

from gaussian.utils import format_value, write_csv_rows

Row = Dict[str, Any]


def parse_value(text: str) -> Any:
    """Inverse of format_value: empty -> None, then int, float, else the raw string."""
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_csv_rows(path: Union[str, Path]) -> Tuple[List[str], List[Row]]:
    with open(path, "r", newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        try:
            columns = next(reader)
        except StopIteration:
            return [], []
        rows = [{c: parse_value(v) for c, v in zip(columns, record)} for record in reader]
    return columns, rows


def rewrite_csv(source: Union[str, Path], target: Union[str, Path]) -> str:
    """Parse a harness CSV and emit it again; the result is byte-identical to the source."""
    columns, rows = read_csv_rows(source)
    return write_csv_rows(target, columns, rows)


__all__ = ["Row", "parse_value", "read_csv_rows", "rewrite_csv", "write_csv_rows", "format_value"]

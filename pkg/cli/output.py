"""
Output Writers

Every command produces a Table (header plus rows) and an optional JSON
payload. CSV uses a comma separator, a header row and LF line endings;
table output is column-aligned text for terminals. JSON is strict: an
infinite or undefined float (tan(theta) with no projection) is written as
null.
"""

import csv
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, TextIO


class OutputFormat(Enum):
    """Output formats accepted by --output."""
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


@dataclass
class Table:
    """Rows of plain values under a fixed header."""

    headers: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)

    def add(self, *values: Any) -> None:
        if len(values) != len(self.headers):
            raise ValueError(f"row has {len(values)} values, header has {len(self.headers)}")
        self.rows.append(values)

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.headers, row)) for row in self.rows]


def write_csv(table: Table, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(table.headers)
    writer.writerows(table.rows)


def write_text(table: Table, stream: TextIO) -> None:
    cells = [[str(h) for h in table.headers]] + [[str(v) for v in row] for row in table.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(table.headers))]
    for k, row in enumerate(cells):
        stream.write("  ".join(value.rjust(width) for value, width in zip(row, widths)).rstrip())
        stream.write("\n")
        if k == 0:
            stream.write("  ".join("-" * width for width in widths) + "\n")


def _json_safe(value: Any) -> Any:
    """Replace non-finite floats with None; JSON has no inf or nan."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def write_json(payload: Dict[str, Any], stream: TextIO) -> None:
    json.dump(_json_safe(payload), stream, indent=2, allow_nan=False)
    stream.write("\n")


def emit(
    table: Table,
    fmt: OutputFormat,
    stream: TextIO,
    payload: Optional[Dict[str, Any]] = None,
) -> None:
    """
    Write a command's result in the requested format.

    Args:
        table: Rows for table and csv output
        fmt: Output format
        stream: Destination (stdout in the CLI)
        payload: JSON document; defaults to {"rows": table.records()}
    """
    if fmt is OutputFormat.CSV:
        write_csv(table, stream)
    elif fmt is OutputFormat.JSON:
        write_json(payload if payload is not None else {"rows": table.records()}, stream)
    else:
        write_text(table, stream)

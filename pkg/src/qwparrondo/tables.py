"""Delimited (CSV) and JSON tables with exact float round-tripping."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from typing import Sequence, Union

__all__ = ["format_value", "parse_value", "render_table", "write_table", "read_table"]

Value = Union[int, float, str]


def format_value(v: Value) -> str:
    if isinstance(v, bool):
        raise TypeError("booleans are not table values")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError(f"non-finite value {v!r} cannot be written")
        return format(v, ".17g")
    return str(v)


def parse_value(s: str) -> Value:
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def render_table(columns: Sequence[str], rows: Sequence[Sequence[Value]], fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([format_value(v) for v in row])
        return buf.getvalue()
    if fmt == "json":
        # numbers go through the same 17-digit text as the CSV path
        body = ",\n".join(
            "[" + ", ".join(
                json.dumps(v) if isinstance(v, str) else format_value(v) for v in row
            ) + "]"
            for row in rows
        )
        return '{"columns": ' + json.dumps(list(columns)) + ',\n"rows": [\n' + body + "\n]}\n"
    raise ValueError(f"unknown table format {fmt!r}")


def write_table(
    path: Union[str, Path], columns: Sequence[str], rows: Sequence[Sequence[Value]], fmt: str = "csv"
) -> None:
    text = render_table(columns, rows, fmt)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_table(path: Union[str, Path], fmt: str | None = None) -> tuple[list[str], list[list[Value]]]:
    """Read a table written by :func:`write_table`; the format is sniffed if not given."""
    text = Path(path).read_text(encoding="utf-8")
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "csv"
    if fmt == "json":
        doc = json.loads(text)
        return list(doc["columns"]), [list(r) for r in doc["rows"]]
    reader = csv.reader(io.StringIO(text))
    columns = next(reader)
    return columns, [[parse_value(s) for s in row] for row in reader]

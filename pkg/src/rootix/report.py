"""Report serialisation shared by the CLI commands.

JSON carries full-precision numbers; CSV and the pretty text view are rounded
presentations of the same data (4 decimals for Dis and correlations, 5 for
root values, matching how such tables are usually printed).
"""

from __future__ import annotations

import io
import json
from typing import Mapping, Sequence

FORMATS = ("pretty", "csv", "json")


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def rows_to_csv(columns: Sequence[str], rows: Sequence[Mapping]) -> str:
    out = io.StringIO()
    out.write(",".join(columns) + "\n")
    for row in rows:
        out.write(",".join(_csv_cell(row[c]) for c in columns) + "\n")
    return out.getvalue()


def rows_to_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def rows_to_pretty(columns: Sequence[str], rows: Sequence[Mapping], title: str = "") -> str:
    cells = [[_csv_cell(row[c]) for c in columns] for row in rows]
    widths = [max(len(col), *(len(r[i]) for r in cells)) if cells else len(col)
              for i, col in enumerate(columns)]
    lines = []
    if title:
        lines.append(title)
    lines.append("  ".join(col.ljust(w) for col, w in zip(columns, widths)))
    for r in cells:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines) + "\n"

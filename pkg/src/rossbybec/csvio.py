"""Deterministic CSV emission shared by the CLI and the demo scripts.

RFC-4180-style: mandatory header row, comma separators, LF line endings.
Reals are written with 17 significant digits so a round-trip through text
reproduces the float64 values bit-exactly, and two identical runs produce
byte-identical files.
"""

from __future__ import annotations

import math


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    text = str(value)
    if any(ch in text for ch in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


def write_csv(path, header, rows):
    """Write header + rows to ``path``; returns the number of data rows."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(str(h) for h in header) + "\n")
        for row in rows:
            fh.write(",".join(format_value(v) for v in row) + "\n")
            count += 1
    return count


def read_csv(path):
    """Read back a write_csv file; returns (header, rows of floats/strings)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"empty CSV file: {path}")
    header = lines[0].split(",")
    rows = []
    for line in lines[1:]:
        row = []
        for cell in line.split(","):
            try:
                row.append(float(cell))
            except ValueError:
                row.append(cell)
        rows.append(row)
    return header, rows

"""Shared plumbing for the figure scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")  # headless, deterministic raster backend

import numpy as np

FOOTER = "axis units: omega in c_s/r0, k in 1/r0, r in a_ho"


class FigureInputError(ValueError):
    """Missing or malformed figure input."""


@dataclass(frozen=True)
class FigureSpec:
    """Inputs, output path, and panel layout of one figure."""

    inputs: tuple
    output: str
    layout: tuple = (1, 1)

    def __post_init__(self):
        for path in self.inputs:
            if not os.path.exists(path):
                raise FigureInputError(f"input does not exist: {path}")


def read_table(path):
    """Read a header+rows CSV into a dict of named float columns."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line]
    if not lines:
        raise FigureInputError(f"empty CSV: {path}")
    header = lines[0].split(",")
    if len(lines) == 1:
        raise FigureInputError(f"CSV has a header but no data rows: {path}")
    data = np.array([[float(cell) for cell in line.split(",")]
                     for line in lines[1:]])
    return {name: data[:, i] for i, name in enumerate(header)}


def save_deterministic(fig, path):
    # constant metadata: no timestamps, fixed writer string
    fig.savefig(path, format="png", metadata={"Software": "rossbyfigs"})

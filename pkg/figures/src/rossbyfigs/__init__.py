"""Figure scripts over rossbybec CLI output.

Read-only consumers: the scripts plot CSV columns produced by the CLI and
never recompute physics (interpolation for the revolved 2-D maps and unit
labels are the only transforms).  Rendering is deterministic: re-running on
identical inputs reproduces the output file byte for byte.
"""

from .common import FigureSpec, read_table
from .dispersion_figure import build_dispersion_figure, render_dispersion_figure
from .stationary_figure import build_stationary_figure, render_stationary_figure

__all__ = [
    "FigureSpec",
    "build_dispersion_figure",
    "build_stationary_figure",
    "read_table",
    "render_dispersion_figure",
    "render_stationary_figure",
]

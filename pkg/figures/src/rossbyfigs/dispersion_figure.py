"""Dispersion-curve figure: omega(k_theta) for three healing lengths.

Input: one dispersion CSV from ``rossbybec dispersion`` holding exactly three
xi families (column ``xi``).  Line styles, not colors, distinguish the
families (solid / dashed / solid by increasing xi), so a monochrome
rendering stays faithful.
"""

from __future__ import annotations

import sys

import matplotlib.pyplot as plt
import numpy as np

from .common import FOOTER, FigureInputError, FigureSpec, read_table

_STYLES = ("-", "--", "-")
_WIDTHS = (1.2, 1.4, 2.2)


def build_dispersion_figure(spec: FigureSpec):
    """Build (but do not save) the single-axes three-curve figure."""
    table = read_table(spec.inputs[0])
    for column in ("k_theta", "omega", "xi"):
        if column not in table:
            raise FigureInputError(f"dispersion CSV lacks column {column!r}")
    families = sorted(set(table["xi"].tolist()))
    if len(families) != 3:
        raise FigureInputError(
            f"expected three xi families, found {len(families)}: {families}")

    fig, ax = plt.subplots(figsize=(6.0, 4.0), dpi=150)
    for xi, style, width in zip(families, _STYLES, _WIDTHS):
        sel = table["xi"] == xi
        order = np.argsort(table["k_theta"][sel])
        ax.plot(table["k_theta"][sel][order], table["omega"][sel][order],
                style, lw=width, color="black", label=f"xi = {xi:g} r0")
    ax.axhline(0.0, color="0.7", lw=0.6)
    ax.set_xlabel("k_theta  [1/r0]")
    ax.set_ylabel("omega  [c_s/r0]")
    ax.set_ylim(top=0.005)  # frequencies are nonpositive; keep zero visible
    ax.legend(frameon=False)
    fig.text(0.99, 0.01, FOOTER, ha="right", va="bottom", fontsize=6,
             color="0.4")
    fig.tight_layout()
    return fig


def render_dispersion_figure(spec: FigureSpec) -> str:
    fig = build_dispersion_figure(spec)
    try:
        from .common import save_deterministic
        save_deterministic(fig, spec.output)
    finally:
        plt.close(fig)
    return spec.output


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        print("usage: fig_dispersion <dispersion.csv> <out.png>",
              file=sys.stderr)
        return 2
    try:
        spec = FigureSpec(inputs=(argv[0],), output=argv[1])
        render_dispersion_figure(spec)
    except FigureInputError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {argv[1]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

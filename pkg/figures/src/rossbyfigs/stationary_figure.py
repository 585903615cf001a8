"""Stationary-structure panels: revolved 2-D maps plus radial comparisons.

Input: a directory holding two ``rossbybec stationary`` outputs (one with a
filled disk, one with a central hole), each a structure.csv/structure.json
pair.  Four panels: for each case the radial profile revolved around the
axis as a 2-D map, and the radial comparison of the wave structure (solid)
against the equilibrium density (dashed).
"""

from __future__ import annotations

import json
import os
import sys

import matplotlib.pyplot as plt
import numpy as np

from .common import FOOTER, FigureInputError, FigureSpec, read_table


def _find_cases(directory):
    cases = {}
    for root, _, files in sorted(os.walk(directory)):
        if "structure.csv" in files and "structure.json" in files:
            with open(os.path.join(root, "structure.json"),
                      encoding="utf-8") as fh:
                meta = json.load(fh)
            key = "annulus" if meta["radii"]["annulus"] else "disk"
            cases.setdefault(key, (os.path.join(root, "structure.csv"), meta))
    missing = {"disk", "annulus"} - set(cases)
    if missing:
        raise FigureInputError(
            f"no {'/'.join(sorted(missing))} structure output found under "
            f"{directory} (need one case per topology)")
    return cases


def _revolve(r, values, n=256):
    # rotate the radial profile around the axis; zero outside the support
    half = np.linspace(-r[-1] * 1.05, r[-1] * 1.05, n)
    xx, yy = np.meshgrid(half, half)
    rho = np.hypot(xx, yy)
    return half, np.interp(rho, r, values, left=0.0, right=0.0)


def build_stationary_figure(spec: FigureSpec):
    """Build the 2x2 panel figure from a directory of CLI outputs."""
    cases = _find_cases(spec.inputs[0])
    fig, axes = plt.subplots(2, 2, figsize=(8.0, 7.0), dpi=150)
    for row, key in enumerate(("disk", "annulus")):
        csv_path, meta = cases[key]
        table = read_table(csv_path)
        r, phi, n_rel = table["r"], table["phi"], table["n_tf_over_peak"]

        extent_axis, image = _revolve(r, phi)
        ax_map = axes[row, 0]
        ax_map.imshow(image, origin="lower", cmap="viridis",
                      extent=[extent_axis[0], extent_axis[-1],
                              extent_axis[0], extent_axis[-1]])
        ax_map.set_title(f"{key}: wave structure (mu = {meta['radii']['mu']:+g})",
                         fontsize=9)
        ax_map.set_xlabel("x  [a_ho]")
        ax_map.set_ylabel("y  [a_ho]")

        ax_rad = axes[row, 1]
        ax_rad.plot(r, phi, "-", color="black", lw=1.6, label="structure")
        ax_rad.plot(r, n_rel, "--", color="black", lw=1.2,
                    label="equilibrium n/n_max")
        ax_rad.axhline(0.0, color="0.7", lw=0.6)
        ax_rad.set_xlabel("r  [a_ho]")
        ax_rad.set_ylabel("amplitude")
        ax_rad.set_title(f"{key}: radial comparison", fontsize=9)
        ax_rad.legend(frameon=False, fontsize=7)
    fig.text(0.99, 0.005, FOOTER, ha="right", va="bottom", fontsize=6,
             color="0.4")
    fig.tight_layout()
    return fig


def render_stationary_figure(spec: FigureSpec) -> str:
    fig = build_stationary_figure(spec)
    try:
        from .common import save_deterministic
        save_deterministic(fig, spec.output)
    finally:
        plt.close(fig)
    return spec.output


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        print("usage: fig_stationary <csv_dir> <out.png>", file=sys.stderr)
        return 2
    try:
        spec = FigureSpec(inputs=(argv[0],), output=argv[1], layout=(2, 2))
        render_stationary_figure(spec)
    except FigureInputError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {argv[1]}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Bessel-mode stationary structures vanishing at the Thomas-Fermi radii.

The simplest nonlinear stationary state of the wave equation has
laplacian(phi) = -kappa^2 phi, with axisymmetric solution

    phi(r) = A J0(kappa r) + B Y0(kappa r)

required to vanish at the support boundary.  Disk topology (mu > 0) forces
B = 0 for regularity at the origin and kappa R_+ = j_{0,n}; annulus topology
(mu < 0) quantizes kappa through the two-point boundary determinant

    D(kappa) = J0(kappa R_-) Y0(kappa R_+) - J0(kappa R_+) Y0(kappa R_-).

Lengths are in a_ho units, kappa in 1/a_ho.  Amplitudes are normalized to
max|phi| = 1 (the linear stationarity condition leaves the amplitude free).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import (
    InvalidParameterError,
    NumericalFailureError,
    ResolutionError,
    WrongTopologyError,
)
from .equilibrium import TfEquilibrium

#: kappa-scan step for annulus root bracketing, in units of 1/(R_+ - R_-)
_SCAN_STEP = 0.01
_SCAN_SPAN = 20.0


def bessel_j0_y0(x):
    """(J0(x), Y0(x)); Y0 requires x > 0 (logarithmic singularity at 0)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise InvalidParameterError("J0 requires x >= 0")
    if np.any(x <= 0):
        raise InvalidParameterError("Y0 requires x > 0")
    j0, y0 = special.j0(x), special.y0(x)
    if x.ndim == 0:
        return float(j0), float(y0)
    return j0, y0


def j0_zero(n: int) -> float:
    """n-th positive zero of J0 (n = 1 is the first, ~2.404826)."""
    if n < 1:
        raise InvalidParameterError(f"zero index must be >= 1, got {n}")
    return float(special.jn_zeros(0, n)[-1])


@dataclass(frozen=True)
class StationaryStructure:
    """Parameters of one radial Bessel mode on [r_inner, r_outer]."""

    kappa: float
    a_coef: float
    b_coef: float
    r_inner: float
    r_outer: float
    mode_index: int


def evaluate_structure(s: StationaryStructure, r_grid):
    """Pointwise A J0(kappa r) + B Y0(kappa r) on grid points in the domain."""
    r = np.asarray(r_grid, dtype=float)
    if np.any(r < s.r_inner) or np.any(r > s.r_outer):
        raise InvalidParameterError(
            f"grid points must lie within [{s.r_inner:.6g}, {s.r_outer:.6g}]"
        )
    phi = s.a_coef * special.j0(s.kappa * r)
    if s.b_coef != 0.0:
        phi = phi + s.b_coef * special.y0(s.kappa * r)
    return float(phi) if phi.ndim == 0 else phi


def solve_disk_mode(eq: TfEquilibrium, mode_index: int = 1) -> StationaryStructure:
    """Disk-topology mode: B = 0, kappa = j_{0,n}/R_+.

    Regularity at the origin excludes Y0; |J0| attains its maximum 1 at the
    origin, so the normalized amplitude is A = 1 exactly.
    """
    if eq.mu <= 0:
        raise WrongTopologyError("disk mode requires mu > 0 (no central hole)")
    if mode_index < 1:
        raise InvalidParameterError(f"mode_index must be >= 1, got {mode_index}")
    r_outer = eq.r_outer
    kappa = j0_zero(mode_index) / r_outer
    return StationaryStructure(kappa=kappa, a_coef=1.0, b_coef=0.0,
                               r_inner=0.0, r_outer=r_outer,
                               mode_index=mode_index)


def annulus_determinant(kappa, r_inner, r_outer):
    """Two-point boundary determinant D(kappa); its zeros quantize kappa."""
    kappa = np.asarray(kappa, dtype=float)
    return (special.j0(kappa * r_inner) * special.y0(kappa * r_outer)
            - special.j0(kappa * r_outer) * special.y0(kappa * r_inner))


def _bisect_determinant(lo, hi, r_inner, r_outer):
    # plain bisection on a sign change; deterministic, runs to float limit
    f_lo = float(annulus_determinant(lo, r_inner, r_outer))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = float(annulus_determinant(mid, r_inner, r_outer))
        if f_mid == 0.0:
            return mid
        if (f_lo < 0) == (f_mid < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_annulus_mode(eq: TfEquilibrium, mode_index: int = 1) -> StationaryStructure:
    """Annulus-topology mode: kappa is the n-th positive root of D(kappa).

    Roots are located by scanning kappa in steps of 0.01/(R_+ - R_-) up to
    20/(R_+ - R_-) and bisecting each sign change; the coefficient pair
    (A, B) = (Y0(kappa R_-), -J0(kappa R_-)) spans the one-dimensional null
    space and is rescaled to max|phi| = 1 with a positive leading extremum.
    """
    if eq.mu >= 0:
        raise WrongTopologyError("annulus mode requires mu < 0 (central hole)")
    if mode_index < 1:
        raise InvalidParameterError(f"mode_index must be >= 1, got {mode_index}")
    r_in, r_out = eq.r_inner, eq.r_outer
    width = r_out - r_in
    step = _SCAN_STEP / width
    kappas = step * np.arange(1, int(_SCAN_SPAN / _SCAN_STEP) + 1)
    values = annulus_determinant(kappas, r_in, r_out)
    signs = np.sign(values)
    flips = np.nonzero(signs[:-1] * signs[1:] < 0)[0]
    if len(flips) < mode_index:
        raise NumericalFailureError(
            f"found only {len(flips)} determinant sign changes on the scan "
            f"(need {mode_index})",
            diagnostic=list(zip(kappas.tolist(), values.tolist())),
        )
    i = flips[mode_index - 1]
    kappa = _bisect_determinant(kappas[i], kappas[i + 1], r_in, r_out)

    a_coef = float(special.y0(kappa * r_in))
    b_coef = float(-special.j0(kappa * r_in))
    raw = StationaryStructure(kappa=kappa, a_coef=a_coef, b_coef=b_coef,
                              r_inner=r_in, r_outer=r_out,
                              mode_index=mode_index)
    r_fine = np.linspace(r_in, r_out, 4001)
    phi = evaluate_structure(raw, r_fine)
    i_max = int(np.argmax(np.abs(phi)))
    scale = phi[i_max]  # sign included: leading extremum becomes +1
    return StationaryStructure(kappa=kappa, a_coef=a_coef / scale,
                               b_coef=b_coef / scale, r_inner=r_in,
                               r_outer=r_out, mode_index=mode_index)


def _polar_laplacian(f, r, dr, dtheta):
    # d2/dr2 + (1/r) d/dr + (1/r^2) d2/dtheta2, periodic in theta
    df_dr = np.gradient(f, dr, axis=0, edge_order=2)
    d2f_dr2 = np.gradient(df_dr, dr, axis=0, edge_order=2)
    d2f_dt2 = (np.roll(f, -1, axis=1) - 2.0 * f + np.roll(f, 1, axis=1)) / dtheta**2
    return d2f_dr2 + df_dr / r + d2f_dt2 / r**2


def _polar_bracket(a, b, r, dr, dtheta):
    # {a, b} = (da/dr db/dtheta - db/dr da/dtheta)/r
    da_dr = np.gradient(a, dr, axis=0, edge_order=2)
    db_dr = np.gradient(b, dr, axis=0, edge_order=2)
    da_dt = (np.roll(a, -1, axis=1) - np.roll(a, 1, axis=1)) / (2.0 * dtheta)
    db_dt = (np.roll(b, -1, axis=1) - np.roll(b, 1, axis=1)) / (2.0 * dtheta)
    return (da_dr * db_dt - db_dr * da_dt) / r


def stationarity_residual(phi, r_grid, xi) -> float:
    """Max-norm residual of the stationary wave equation on a polar grid.

    phi has shape (n_r, n_theta) on a uniform radial grid r_grid (> 0) and a
    uniform periodic theta grid.  The residual discretizes

        (1 + xi^2 lap/2) {phi, lap phi} - (xi^2/2) {phi, lap^2 phi}

    with central differences; for an axisymmetric field every Poisson bracket
    vanishes identically so the result is grid roundoff only.
    """
    phi = np.asarray(phi, dtype=float)
    if phi.ndim != 2:
        raise InvalidParameterError("phi must be a 2-D (r, theta) array")
    n_r, n_theta = phi.shape
    if n_r < 16 or n_theta < 16:
        raise ResolutionError(f"grid {n_r}x{n_theta} too coarse; need >= 16 per axis")
    r = np.asarray(r_grid, dtype=float)
    if r.shape != (n_r,):
        raise InvalidParameterError("r_grid length must match phi.shape[0]")
    if np.any(r <= 0):
        raise InvalidParameterError("polar grid requires r > 0")
    dr_all = np.diff(r)
    dr = dr_all[0]
    if not np.allclose(dr_all, dr, rtol=1e-10, atol=0.0):
        raise InvalidParameterError("r_grid must be uniform")
    dtheta = 2.0 * math.pi / n_theta
    rc = r[:, None]

    lap_phi = _polar_laplacian(phi, rc, dr, dtheta)
    bracket1 = _polar_bracket(phi, lap_phi, rc, dr, dtheta)
    lap2_phi = _polar_laplacian(lap_phi, rc, dr, dtheta)
    bracket2 = _polar_bracket(phi, lap2_phi, rc, dr, dtheta)
    residual = (bracket1 + 0.5 * xi**2 * _polar_laplacian(bracket1, rc, dr, dtheta)
                - 0.5 * xi**2 * bracket2)
    return float(np.max(np.abs(residual)))

"""Conserved-quantity accounting, spectra, and velocity-field reconstruction.

Spectral sums use the real-field convention phi(x) = sum_k phi_k exp(i k.x),
so sum_k |phi_k|^2 equals the box average of phi^2 (Parseval).  Real-space
snapshots live on a periodic square grid in internal wave units (r0 = 1,
c_s = 1, 2*Omega = 1); spatial derivatives use 4th-order central stencils
with periodic wrap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dispersion import ModelParams
from .errors import InvalidParameterError, ResolutionError
from .spectral import ModeGrid, SpectralState


def energy_enstrophy(state: SpectralState):
    """Quadratic invariants (E, Z, E_xi) of the mode spectrum.

    E = sum (1+k^2)|phi_k|^2 and Z = sum k^2(1+k^2)|phi_k|^2 are the standard
    quadratic invariants of the xi = 0 dynamics.  E_xi adds the zero-point
    weight, sum (1+k^2+xi^2 k^4/2)|phi_k|^2; its conservation for xi > 0 is
    not established, so it is reported for monitoring rather than asserted.
    """
    grid = state.grid
    power = np.abs(state.amplitudes) ** 2
    k2 = grid.k_r**2 + grid.k_theta**2
    e = float(np.sum((1.0 + k2) * power))
    z = float(np.sum(k2 * (1.0 + k2) * power))
    e_xi = float(np.sum((1.0 + k2 + 0.5 * state.params.xi**2 * k2**2) * power))
    return e, z, e_xi


def zonal_spectrum(state: SpectralState):
    """Marginal power over the zonal wavenumber: rows (k_theta, sum_kr power).

    Rows are sorted by k_theta ascending; the powers sum to sum|phi_k|^2.
    """
    grid = state.grid
    power = np.abs(state.amplitudes) ** 2
    per_column = power.sum(axis=0)
    order = np.argsort(grid.lattice, kind="stable")
    return [(float(grid.lattice[j] * grid.spacing), float(per_column[j]))
            for j in order]


@dataclass(frozen=True)
class FieldSnapshot:
    """Real field phi = delta n/n_inf sampled on a periodic square grid.

    values[ix, iy] with axis 0 the radial (x) direction and axis 1 the zonal
    (y) direction; ``spacing`` is the grid step in r0 units.
    """

    spacing: float
    values: np.ndarray
    params: ModelParams

    def __post_init__(self):
        v = np.asarray(self.values)
        if v.ndim != 2:
            raise InvalidParameterError("snapshot values must be a 2-D array")
        if not np.all(np.isfinite(v)):
            raise InvalidParameterError("snapshot values must be finite")
        if not self.spacing > 0:
            raise InvalidParameterError("grid spacing must be > 0")


def snapshot_from_state(state: SpectralState) -> FieldSnapshot:
    """Sample the real field of a spectral state on its natural n x n grid.

    The box side is the fundamental wavelength 2*pi/spacing of the mode
    lattice; with the sum convention above the samples are
    ifft2(amplitudes) * n^2.
    """
    n = state.grid.n_modes
    field = np.fft.ifft2(state.amplitudes) * (n * n)
    dx = 2.0 * math.pi / (state.grid.spacing * n)
    return FieldSnapshot(spacing=dx, values=np.ascontiguousarray(field.real),
                         params=state.params)


def mode_amplitudes_from_snapshot(snap: FieldSnapshot) -> np.ndarray:
    """Inverse of :func:`snapshot_from_state`: lattice coefficients fft2/n^2."""
    n = snap.values.shape[0]
    return np.fft.fft2(snap.values) / (n * n)


# ---------------------------------------------------------------------------
# 4th-order periodic finite differences
# ---------------------------------------------------------------------------

def fd_derivative(f, spacing, axis):
    """4th-order central first derivative with periodic wrap."""
    up1, up2 = np.roll(f, -1, axis=axis), np.roll(f, -2, axis=axis)
    dn1, dn2 = np.roll(f, 1, axis=axis), np.roll(f, 2, axis=axis)
    return (-up2 + 8.0 * up1 - 8.0 * dn1 + dn2) / (12.0 * spacing)


def fd_laplacian(f, spacing):
    """4th-order periodic Laplacian."""
    out = np.zeros_like(f, dtype=float)
    for axis in (0, 1):
        up1, up2 = np.roll(f, -1, axis=axis), np.roll(f, -2, axis=axis)
        dn1, dn2 = np.roll(f, 1, axis=axis), np.roll(f, 2, axis=axis)
        out += (-up2 + 16.0 * up1 - 30.0 * f + 16.0 * dn1 - dn2) / (12.0 * spacing**2)
    return out


def _require_resolution(values):
    nx, ny = values.shape
    if nx < 16 or ny < 16:
        raise ResolutionError(f"grid {nx}x{ny} too coarse for 4th-order stencils")


def _force_field(values, spacing, xi):
    # S = -grad(phi) + (xi^2/2) grad(lap phi), per component
    base = -values
    if xi != 0.0:
        base = base + 0.5 * xi**2 * fd_laplacian(values, spacing)
    sx = fd_derivative(base, spacing, axis=0)
    sy = fd_derivative(base, spacing, axis=1)
    return sx, sy


def drift_velocity_field(snap: FieldSnapshot):
    """Zeroth-order drift velocity v0 = z x S (internal units, 2*Omega = 1).

    S = -grad(phi) + (xi^2/2) grad(lap phi); the rotation makes v0 a rotated
    gradient, hence divergence-free up to stencil error for xi = 0.
    """
    _require_resolution(snap.values)
    sx, sy = _force_field(snap.values, snap.spacing, snap.params.xi)
    return -sy, sx


def polarization_velocity_field(snap: FieldSnapshot, dphi_dt: FieldSnapshot):
    """First-order polarization drift correction (internal units).

    v_p = -dS/dt - (z x S).grad S, with dS/dt built from the time-derivative
    snapshot (S is linear in phi).  Both snapshots must share grid and model
    parameters.
    """
    _require_resolution(snap.values)
    if snap.values.shape != dphi_dt.values.shape:
        raise InvalidParameterError("snapshot and time-derivative grids differ")
    if snap.spacing != dphi_dt.spacing:
        raise InvalidParameterError("snapshot and time-derivative spacings differ")
    xi, dx = snap.params.xi, snap.spacing
    sx, sy = _force_field(snap.values, dx, xi)
    st_x, st_y = _force_field(dphi_dt.values, dx, xi)
    v0x, v0y = -sy, sx
    adv_x = v0x * fd_derivative(sx, dx, axis=0) + v0y * fd_derivative(sx, dx, axis=1)
    adv_y = v0x * fd_derivative(sy, dx, axis=0) + v0y * fd_derivative(sy, dx, axis=1)
    return -st_x - adv_x, -st_y - adv_y

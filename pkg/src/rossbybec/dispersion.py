"""Generalized Rossby-wave dispersion relation and limiting velocities.

Everything here is in wave units (lengths in r0, speeds in c_s, frequencies
in c_s/r0), so the relation is the two-parameter family

    omega(k) = -v_r * k_theta * (1 + xi^2 k^2 / 2)
               / (1 + k^2 (1 + xi^2 k^2 / 2))

with xi the healing length in r0 units and v_r the drift speed in c_s units.
xi = 0 recovers the standard Charney/Hasegawa-Mima dispersion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, UndefinedGradientError


@dataclass(frozen=True)
class WaveVector:
    """2-D wave vector with a designated zonal (azimuthal) component."""

    k_r: float
    k_theta: float

    @property
    def k2(self):
        return self.k_r**2 + self.k_theta**2

    @property
    def magnitude(self):
        return math.sqrt(self.k2)

    def __iter__(self):
        yield self.k_r
        yield self.k_theta


@dataclass(frozen=True)
class ModelParams:
    """Wave-model parameters: drift speed v_r (c_s) and healing length xi (r0).

    xi = 0 is the Thomas-Fermi limit.
    """

    v_r: float
    xi: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.v_r):
            raise InvalidParameterError(f"v_r must be finite, got {self.v_r}")
        if not (math.isfinite(self.xi) and self.xi >= 0):
            raise InvalidParameterError(f"xi must be >= 0, got {self.xi}")


def omega_values(k_r, k_theta, m: ModelParams):
    """Vectorized dispersion relation over arrays of wave-vector components."""
    k_r = np.asarray(k_r, dtype=float)
    k_theta = np.asarray(k_theta, dtype=float)
    k2 = k_r**2 + k_theta**2
    s = 1.0 + 0.5 * m.xi**2 * k2
    return -m.v_r * k_theta * s / (1.0 + k2 * s)


def omega(k: WaveVector, m: ModelParams) -> float:
    """Wave frequency (c_s/r0 units) for a single wave vector."""
    return float(omega_values(k.k_r, k.k_theta, m))


def group_velocity(k: WaveVector, m: ModelParams):
    """Analytic gradient (domega/dk_r, domega/dk_theta).

    Undefined at k = 0 (where the zonal phase speed and the short-wavelength
    asymptotics also break down).
    """
    k2 = k.k2
    if k2 == 0:
        raise UndefinedGradientError("group velocity undefined at k = 0")
    s = 1.0 + 0.5 * m.xi**2 * k2
    d = 1.0 + k2 * s
    # ds/dk_i = xi^2 k_i, dD/dk_i = k_i (2 s + xi^2 k^2)
    dd_factor = 2.0 * s + m.xi**2 * k2
    cg_r = -m.v_r * k.k_theta * k.k_r * (m.xi**2 * d - s * dd_factor) / d**2
    cg_t = -m.v_r * ((s + m.xi**2 * k.k_theta**2) * d
                     - s * k.k_theta**2 * dd_factor) / d**2
    return cg_r, cg_t


def zonal_phase_speed(k: WaveVector, m: ModelParams) -> float:
    """omega/k_theta; NaN when k_theta = 0."""
    if k.k_theta == 0:
        return math.nan
    return omega(k, m) / k.k_theta


def short_wavelength_phase_speed(k: WaveVector, m: ModelParams) -> float:
    """Asymptotic zonal phase speed -v_r/k^2, valid for k^2 >> 1."""
    k2 = k.k2
    if k2 == 0:
        raise UndefinedGradientError("asymptotic form undefined at k = 0")
    return -m.v_r / k2


def short_wavelength_group_velocity(k: WaveVector, m: ModelParams):
    """Both short-wavelength zonal group-velocity estimates, for k^2 >> 1.

    Returns ``(printed, gradient)``: the printed closed form
    v_r (2 k_theta/k - 1)/k^2 and the analytic gradient of the asymptotic
    dispersion, v_r (2 k_theta^2/k^2 - 1)/k^2.  The two coincide only when
    k = k_theta; both are reported rather than guessing which is intended.
    """
    k2 = k.k2
    if k2 == 0:
        raise UndefinedGradientError("asymptotic form undefined at k = 0")
    kmag = math.sqrt(k2)
    printed = m.v_r * (2.0 * k.k_theta / kmag - 1.0) / k2
    gradient = m.v_r * (2.0 * k.k_theta**2 / k2 - 1.0) / k2
    return printed, gradient


def dispersion_scan(k_range, m: ModelParams):
    """Tabulate (k_r, k_theta, omega, c_ph_zonal, cg_r, cg_theta) per wave vector.

    Row order is identical to the input order.  Rows with k_theta = 0 carry
    NaN zonal phase speed; the k = 0 row carries NaN group velocity.
    """
    k_range = list(k_range)
    if not k_range:
        raise InvalidParameterError("dispersion_scan requires a non-empty k_range")
    rows = []
    for k in k_range:
        if not isinstance(k, WaveVector):
            k = WaveVector(*k)
        w = omega(k, m)
        c_ph = zonal_phase_speed(k, m)
        if k.k2 == 0:
            cg_r = cg_t = math.nan
        else:
            cg_r, cg_t = group_velocity(k, m)
        rows.append((k.k_r, k.k_theta, w, c_ph, cg_r, cg_t))
    return rows


SCAN_COLUMNS = ("k_r", "k_theta", "omega", "c_ph_zonal", "cg_r", "cg_theta")

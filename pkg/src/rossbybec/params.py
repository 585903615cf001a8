"""Physical inputs and derived characteristic scales.

Two dimensionless unit systems are used downstream:

* trap units -- lengths in the oscillator length a_ho, energies in
  hbar*omega_perp, frequencies in omega_perp (equilibria, stationary
  structures);
* wave units -- lengths in the Rossby radius r0 = c_s/(2*Omega), speeds in
  the sound speed c_s, times in r0/c_s (dispersion, spectral dynamics).

``PhysicalParams`` ingests SI quantities; everything downstream consumes
dimensionless numbers only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidParameterError

HBAR = 1.054571817e-34  # J s

#: keys accepted in a JSON parameter file (all numeric)
PARAM_FILE_KEYS = (
    "omega_perp_hz",
    "omega_ratio",
    "beta",
    "mu_hbar_omega",
    "xi_over_r0",
    "v_r_over_cs",
)


@dataclass(frozen=True)
class PhysicalParams:
    """SI inputs for a rotating, anharmonically trapped condensate.

    omega_perp : transverse trap frequency (rad/s)
    Omega      : rotation rate (rad/s)
    beta       : dimensionless quartic anharmonicity of the trap
    g_int      : contact interaction strength (energy * volume)
    mass       : atomic mass (kg)
    mu         : chemical potential in units of hbar*omega_perp (signed)
    """

    omega_perp: float
    Omega: float
    beta: float
    g_int: float
    mass: float
    mu: float = 0.0
    hbar: float = HBAR

    def __post_init__(self):
        if not self.omega_perp > 0:
            raise InvalidParameterError(f"omega_perp must be > 0, got {self.omega_perp}")
        if self.Omega < 0:
            raise InvalidParameterError(f"Omega must be >= 0, got {self.Omega}")
        if self.beta < 0:
            raise InvalidParameterError(f"beta must be >= 0, got {self.beta}")
        if self.Omega >= self.omega_perp and self.beta == 0:
            # harmonic + centrifugal cancel at Omega = omega_perp; without the
            # quartic term the potential is unbounded from below
            raise InvalidParameterError(
                "beta must be > 0 for Omega >= omega_perp (unbounded potential)"
            )
        if not self.mass > 0:
            raise InvalidParameterError(f"mass must be > 0, got {self.mass}")
        if not self.g_int > 0:
            raise InvalidParameterError(f"g_int must be > 0, got {self.g_int}")
        if not self.hbar > 0:
            raise InvalidParameterError(f"hbar must be > 0, got {self.hbar}")

    @property
    def omega_ratio(self):
        """Rotation rate over trap frequency, Omega/omega_perp."""
        return self.Omega / self.omega_perp

    @classmethod
    def from_trap_scales(cls, omega_perp, a_ho, sound_speed, Omega, mu=0.0,
                         g_int=None, hbar=HBAR):
        """Build params that reproduce given oscillator length and sound speed.

        The atomic mass follows from a_ho = sqrt(hbar/(mass*omega_perp)) and
        the anharmonicity from c_s = a_ho*omega_perp*sqrt(beta/2); no atomic
        species is assumed.  ``g_int`` only sets the density prefactor n_inf
        (c_s, xi, r0 are independent of it) and defaults to
        hbar*omega_perp*a_ho**3.
        """
        if not a_ho > 0 or not sound_speed > 0:
            raise InvalidParameterError("a_ho and sound_speed must be > 0")
        mass = hbar / (a_ho**2 * omega_perp)
        beta = 2.0 * (sound_speed / (a_ho * omega_perp)) ** 2
        if g_int is None:
            g_int = hbar * omega_perp * a_ho**3
        return cls(omega_perp=omega_perp, Omega=Omega, beta=beta, g_int=g_int,
                   mass=mass, mu=mu, hbar=hbar)


@dataclass(frozen=True)
class DerivedScales:
    """Characteristic scales derived from :class:`PhysicalParams`.

    a_ho   : oscillator length (m)
    c_s    : sound speed (m/s)
    xi     : healing length (m)
    r0     : Rossby radius c_s/(2*Omega) (m)
    n_inf  : density prefactor beta*hbar*omega_perp/(2*g) (1/m^3)
    rossby : Rossby number r0/a_ho
    v_r    : drift speed (m/s); None until an equilibrium gradient is fixed
    """

    a_ho: float
    c_s: float
    xi: float
    r0: float
    n_inf: float
    rossby: float
    v_r: float | None = None

    @property
    def xi_over_r0(self):
        return self.xi / self.r0

    @property
    def aho_over_r0(self):
        return self.a_ho / self.r0

    def length_trap_to_wave(self, x_aho):
        """Convert a length from a_ho units to r0 units."""
        return x_aho * self.a_ho / self.r0

    def length_wave_to_trap(self, x_r0):
        """Convert a length from r0 units to a_ho units."""
        return x_r0 * self.r0 / self.a_ho

    def wavenumber_trap_to_wave(self, k_per_aho):
        """Convert a wavenumber from 1/a_ho units to 1/r0 units."""
        return k_per_aho * self.r0 / self.a_ho

    def speed_si_to_wave(self, v_si):
        """Express a speed in units of c_s."""
        return v_si / self.c_s

    def frequency_si_to_wave(self, w_si):
        """Express an angular frequency in units of c_s/r0."""
        return w_si * self.r0 / self.c_s

    def with_drift_speed(self, v_r):
        return replace(self, v_r=v_r)


def derive_scales(p: PhysicalParams) -> DerivedScales:
    """Compute every characteristic scale from the physical inputs.

    n_inf = beta*hbar*omega_perp/(2 g),  c_s = sqrt(g n_inf/m),
    xi = hbar/sqrt(2 m g n_inf),  r0 = c_s/(2 Omega),  Ro = r0/a_ho.
    Requires Omega > 0 (otherwise r0 is undefined).
    """
    if p.Omega == 0:
        raise InvalidParameterError("r0 = c_s/(2*Omega) is undefined for Omega = 0")
    if p.beta == 0:
        raise InvalidParameterError("beta = 0 gives zero density prefactor n_inf")
    a_ho = math.sqrt(p.hbar / (p.mass * p.omega_perp))
    n_inf = p.beta * p.hbar * p.omega_perp / (2.0 * p.g_int)
    c_s = math.sqrt(p.g_int * n_inf / p.mass)
    xi = p.hbar / math.sqrt(2.0 * p.mass * p.g_int * n_inf)
    r0 = c_s / (2.0 * p.Omega)
    return DerivedScales(a_ho=a_ho, c_s=c_s, xi=xi, r0=r0, n_inf=n_inf,
                         rossby=r0 / a_ho)


def effective_potential(r, p: PhysicalParams):
    """Effective trap (harmonic + centrifugal + quartic) at radius r.

    r is in a_ho units; the result is in hbar*omega_perp units:
    (1/2)[(1 - Omega^2/omega_perp^2) r^2 + beta r^4].
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise InvalidParameterError("radius must be >= 0")
    ratio2 = (p.Omega / p.omega_perp) ** 2
    v = 0.5 * ((1.0 - ratio2) * r**2 + p.beta * r**4)
    return float(v) if v.ndim == 0 else v


def drift_speed_over_cs(dlnn_dr_per_aho, scales: DerivedScales):
    """Rossby drift speed v_R/c_s from a log-density gradient in 1/a_ho units.

    v_R = -2 Omega r0^2 d(ln n0)/dr collapses to -(r0/a_ho) * gradient once
    expressed in c_s units.
    """
    return -scales.rossby * dlnn_dr_per_aho


def load_param_file(path):
    """Read a JSON parameter file, rejecting unknown keys.

    Returns a dict holding only the keys present in the file; all values are
    validated to be finite numbers.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, dict):
        raise InvalidParameterError("parameter file must contain a JSON object")
    unknown = sorted(set(raw) - set(PARAM_FILE_KEYS))
    if unknown:
        raise InvalidParameterError(f"unknown parameter file key(s): {', '.join(unknown)}")
    out = {}
    for key, value in raw.items():
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise InvalidParameterError(f"parameter {key!r} must be numeric, got {value!r}")
        if not math.isfinite(value):
            raise InvalidParameterError(f"parameter {key!r} must be finite")
        out[key] = float(value)
    return out

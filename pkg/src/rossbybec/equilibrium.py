"""Thomas-Fermi equilibria of the rotating anharmonic trap.

Lengths are in a_ho units and the chemical potential mu in hbar*omega_perp
units throughout.  The equilibrium density is the quartic

    n0(r)/n_inf = (R_+^2 - r^2)(r^2 - R_-^2),  clipped at zero outside
                                               its support,

whose roots R_+- follow from the inverted effective potential.  For mu > 0
the inner radius squared is negative (R_- imaginary, disk topology); at
mu = 0 a hole opens in the centre and for mu < 0 the support is the annulus
R_- < r < R_+.  Note n_inf is the prefactor of the quartic, not the profile
maximum: the annulus peak (R_+^2 - R_-^2)^2/4 exceeds it whenever that value
is > 1 (see :func:`peak_density`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyCloudError,
    InvalidParameterError,
    NoEquilibriumError,
    SingularGradientError,
)


@dataclass(frozen=True)
class TfEquilibrium:
    """Thomas-Fermi equilibrium: trap parameters plus the squared radii.

    r_minus_sq may be negative, in which case R_- is imaginary and the cloud
    is a disk; the annulus flag is equivalent to mu < 0.
    """

    mu: float
    omega_ratio: float
    beta: float
    r_plus_sq: float
    r_minus_sq: float

    @property
    def is_annulus(self):
        return self.r_minus_sq > 0

    @property
    def r_outer(self):
        return math.sqrt(self.r_plus_sq)

    @property
    def r_inner(self):
        """Inner support radius: sqrt(r_minus_sq) for an annulus, else 0."""
        return math.sqrt(self.r_minus_sq) if self.is_annulus else 0.0


def tf_radii(mu, omega_ratio, beta) -> TfEquilibrium:
    """Solve the quartic equilibrium for the squared Thomas-Fermi radii.

    R_+-^2 = A +- sqrt(A^2 + 2 mu/beta) with A = (omega_ratio^2 - 1)/(2 beta).
    Raises when the discriminant is negative (no equilibrium) or the outer
    radius collapses (empty cloud).
    """
    if not beta > 0:
        raise InvalidParameterError(f"beta must be > 0, got {beta}")
    a = (omega_ratio**2 - 1.0) / (2.0 * beta)
    disc = a * a + 2.0 * mu / beta
    if disc < 0:
        raise NoEquilibriumError(
            f"negative discriminant {disc:.6g}: no real Thomas-Fermi radii"
        )
    root = math.sqrt(disc)
    r_plus_sq = a + root
    r_minus_sq = a - root
    if r_plus_sq <= 0:
        raise EmptyCloudError(f"outer radius squared {r_plus_sq:.6g} <= 0")
    return TfEquilibrium(mu=float(mu), omega_ratio=float(omega_ratio),
                         beta=float(beta), r_plus_sq=r_plus_sq,
                         r_minus_sq=r_minus_sq)


def tf_profile(r, eq: TfEquilibrium):
    """Equilibrium density in n_inf units at radius r (a_ho units).

    The quartic is clipped at zero outside the support; it vanishes at the
    Thomas-Fermi radii by construction.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise InvalidParameterError("radius must be >= 0")
    r2 = r**2
    n = (eq.r_plus_sq - r2) * (r2 - eq.r_minus_sq)
    n = np.maximum(n, 0.0)
    return float(n) if n.ndim == 0 else n


def peak_density(eq: TfEquilibrium) -> float:
    """Actual maximum of n0/n_inf over the support.

    2 mu/beta at the centre for a disk; ((R_+^2 - R_-^2)/2)^2 at
    r^2 = (R_+^2 + R_-^2)/2 for an annulus.
    """
    if eq.is_annulus:
        return ((eq.r_plus_sq - eq.r_minus_sq) / 2.0) ** 2
    return eq.r_plus_sq * (-eq.r_minus_sq) + 0.0  # +0.0 avoids -0.0 at mu = 0


def log_density_gradient(r, eq: TfEquilibrium):
    """d(ln n0)/dr in 1/a_ho units, analytic, strictly inside the support.

    -2r/(R_+^2 - r^2) + 2r/(r^2 - R_-^2); diverges at the support boundary
    (simple poles at the quartic roots), hence the strict-interior check.
    """
    r_arr = np.asarray(r, dtype=float)
    r2 = r_arr**2
    # guard a few ulps so radii that round exactly onto a root are rejected
    pad = 1e-13 * max(1.0, abs(eq.r_plus_sq), abs(eq.r_minus_sq))
    inside = (r2 < eq.r_plus_sq - pad) & (r2 > eq.r_minus_sq + pad) & (r_arr >= 0)
    if not np.all(inside):
        raise SingularGradientError(
            "log-density gradient requires points strictly inside the support"
        )
    g = -2.0 * r_arr / (eq.r_plus_sq - r2) + 2.0 * r_arr / (r2 - eq.r_minus_sq)
    return float(g) if g.ndim == 0 else g

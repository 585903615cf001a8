"""Rossby (drift-acoustic) waves in rapidly rotating Bose-Einstein condensates.

Library layout:

* :mod:`rossbybec.params` -- SI inputs, derived scales, unit conversions
* :mod:`rossbybec.dispersion` -- generalized dispersion relation and velocities
* :mod:`rossbybec.equilibrium` -- Thomas-Fermi equilibria in anharmonic traps
* :mod:`rossbybec.stationary` -- Bessel-mode stationary solitary structures
* :mod:`rossbybec.spectral` -- truncated Fourier dynamics and resonant triads
* :mod:`rossbybec.diagnostics` -- invariants, spectra, velocity reconstruction
* :mod:`rossbybec.cli` -- command-line interface over the above
"""

from .dispersion import ModelParams, WaveVector, dispersion_scan, group_velocity, omega
from .equilibrium import TfEquilibrium, log_density_gradient, tf_profile, tf_radii
from .params import (
    DerivedScales,
    PhysicalParams,
    derive_scales,
    effective_potential,
    load_param_file,
)
from .spectral import (
    ModeGrid,
    SpectralState,
    Triad,
    build_mode_grid,
    coupling,
    find_resonant_triads,
    integrate,
    integrate_triad,
    rhs,
    rhs_direct,
)
from .stationary import (
    StationaryStructure,
    bessel_j0_y0,
    evaluate_structure,
    solve_annulus_mode,
    solve_disk_mode,
    stationarity_residual,
)
from .diagnostics import (
    FieldSnapshot,
    drift_velocity_field,
    energy_enstrophy,
    polarization_velocity_field,
    zonal_spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "DerivedScales",
    "FieldSnapshot",
    "ModeGrid",
    "ModelParams",
    "PhysicalParams",
    "SpectralState",
    "StationaryStructure",
    "TfEquilibrium",
    "Triad",
    "WaveVector",
    "bessel_j0_y0",
    "build_mode_grid",
    "coupling",
    "derive_scales",
    "dispersion_scan",
    "drift_velocity_field",
    "effective_potential",
    "energy_enstrophy",
    "evaluate_structure",
    "find_resonant_triads",
    "group_velocity",
    "integrate",
    "integrate_triad",
    "load_param_file",
    "log_density_gradient",
    "omega",
    "polarization_velocity_field",
    "rhs",
    "rhs_direct",
    "solve_annulus_mode",
    "solve_disk_mode",
    "stationarity_residual",
    "tf_profile",
    "tf_radii",
    "zonal_spectrum",
]

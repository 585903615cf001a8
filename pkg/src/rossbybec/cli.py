"""Command-line entry point: subcommands over JSON config and CSV emission.

Exit codes: 0 success, 2 usage/parameter error, 1 numerical or I/O failure.
All error messages go to stderr with an ``ERROR:`` prefix.  The env var
``ROSSBY_THREADS`` caps the worker count of the parallel scan paths; results
are collected in fixed order so output bytes do not depend on it.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import diagnostics, dispersion, equilibrium, spectral, stationary
from .csvio import write_csv
from .dispersion import ModelParams, WaveVector
from .errors import InvalidParameterError, RossbyBecError
from .params import load_param_file

SIMULATE_KEYS = ("n_modes", "k_max", "xi_over_r0", "v_r_over_cs", "dt",
                 "t_final", "seed", "init", "output_every")
INIT_CHOICES = ("single_mode", "random_spectrum", "triad")


@dataclass
class RunConfig:
    """Resolved invocation: subcommand, config path, output dir, overrides."""

    subcommand: str
    param_file: str | None
    out_dir: str
    overrides: dict = field(default_factory=dict)


def _worker_count():
    raw = os.environ.get("ROSSBY_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError(f"ROSSBY_THREADS must be an integer, got {raw!r}")
    if value < 1:
        raise InvalidParameterError(f"ROSSBY_THREADS must be >= 1, got {value}")
    return value


def _ensure_out_dir(path):
    os.makedirs(path, exist_ok=True)
    if not os.access(path, os.W_OK):
        raise OSError(f"output directory not writable: {path}")
    return path


def _parse_float_list(text):
    try:
        return [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise InvalidParameterError(f"expected comma-separated floats, got {text!r}")


def _file_params(args):
    return load_param_file(args.params) if getattr(args, "params", None) else {}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_dispersion(args):
    file_params = _file_params(args)
    v_r = args.v_r if args.v_r is not None else file_params.get("v_r_over_cs", 0.1)
    if args.xi is not None:
        xi_values = _parse_float_list(args.xi)
    elif "xi_over_r0" in file_params:
        xi_values = [file_params["xi_over_r0"]]
    else:
        xi_values = [0.0]
    if not xi_values:
        raise InvalidParameterError("at least one xi value is required")
    out_dir = _ensure_out_dir(args.out_dir)
    k_theta = np.linspace(0.0, args.k_max, args.n_k)

    def scan(xi):
        m = ModelParams(v_r=v_r, xi=xi)
        rows = dispersion.dispersion_scan(
            [WaveVector(args.k_r, kt) for kt in k_theta], m)
        return [row + (xi,) for row in rows]

    workers = min(_worker_count(), len(xi_values))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            families = list(pool.map(scan, xi_values))
    else:
        families = [scan(xi) for xi in xi_values]
    rows = [row for family in families for row in family]
    path = os.path.join(out_dir, "dispersion.csv")
    write_csv(path, dispersion.SCAN_COLUMNS + ("xi",), rows)
    print(f"wrote {path} ({len(rows)} rows, {len(xi_values)} xi families)")
    return 0


def _equilibrium_from_args(args):
    file_params = _file_params(args)
    omega_ratio = args.omega_ratio if args.omega_ratio is not None \
        else file_params.get("omega_ratio")
    beta = args.beta if args.beta is not None else file_params.get("beta")
    mu = args.mu if args.mu is not None else file_params.get("mu_hbar_omega")
    if omega_ratio is None or beta is None or mu is None:
        raise InvalidParameterError(
            "omega-ratio, beta and mu are required (flags or parameter file)")
    return equilibrium.tf_radii(mu, omega_ratio, beta)


def _radii_payload(eq):
    return {
        "mu": eq.mu,
        "omega_ratio": eq.omega_ratio,
        "beta": eq.beta,
        "r_plus_sq": eq.r_plus_sq,
        "r_minus_sq": eq.r_minus_sq,
        "r_plus": eq.r_outer,
        "r_minus": eq.r_inner if eq.is_annulus else None,
        "annulus": eq.is_annulus,
        "peak_density": equilibrium.peak_density(eq),
    }


def _cmd_equilibrium(args):
    eq = _equilibrium_from_args(args)
    out_dir = _ensure_out_dir(args.out_dir)
    radii_path = os.path.join(out_dir, "radii.json")
    with open(radii_path, "w", encoding="utf-8") as fh:
        json.dump(_radii_payload(eq), fh, indent=2, sort_keys=True)
        fh.write("\n")
    r_grid = np.linspace(0.0, 1.05 * eq.r_outer, args.n_r)
    rows = []
    for r in r_grid:
        n = equilibrium.tf_profile(r, eq)
        interior = n > 0 and r**2 > eq.r_minus_sq and r**2 < eq.r_plus_sq
        g = equilibrium.log_density_gradient(r, eq) if interior else math.nan
        rows.append((float(r), float(n), g))
    profile_path = os.path.join(out_dir, "profile.csv")
    write_csv(profile_path, ("r", "n_over_ninf", "dlnn_dr"), rows)
    print(f"wrote {radii_path} and {profile_path} (R_+ = {eq.r_outer:.6f} a_ho)")
    return 0


def _cmd_stationary(args):
    eq = _equilibrium_from_args(args)
    if eq.mu > 0:
        mode = stationary.solve_disk_mode(eq, args.mode_index)
    else:
        mode = stationary.solve_annulus_mode(eq, args.mode_index)
    out_dir = _ensure_out_dir(args.out_dir)
    r_grid = np.linspace(mode.r_inner, mode.r_outer, args.n_r)
    phi = stationary.evaluate_structure(mode, r_grid)
    peak = equilibrium.peak_density(eq)
    n_rel = equilibrium.tf_profile(r_grid, eq) / peak
    csv_path = os.path.join(out_dir, "structure.csv")
    write_csv(csv_path, ("r", "phi", "n_tf_over_peak"),
              zip(r_grid.tolist(), phi.tolist(), n_rel.tolist()))
    payload = {
        "kappa": mode.kappa,
        "a_coef": mode.a_coef,
        "b_coef": mode.b_coef,
        "r_inner": mode.r_inner,
        "r_outer": mode.r_outer,
        "mode_index": mode.mode_index,
        "radii": _radii_payload(eq),
    }
    json_path = os.path.join(out_dir, "structure.json")
    with open(json_path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {json_path} and {csv_path} (kappa = {mode.kappa:.6f} /a_ho)")
    return 0


def _simulate_config(args):
    config = {
        "n_modes": 16, "k_max": 8.0, "xi_over_r0": 0.0, "v_r_over_cs": 0.1,
        "dt": 1e-3, "t_final": 10.0, "seed": 42, "init": "random_spectrum",
        "output_every": 100,
    }
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise InvalidParameterError("run config must be a JSON object")
        unknown = sorted(set(raw) - set(SIMULATE_KEYS))
        if unknown:
            raise InvalidParameterError(
                f"unknown run-config key(s): {', '.join(unknown)}")
        config.update(raw)
    for key in SIMULATE_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            config[key] = value
    if config["init"] not in INIT_CHOICES:
        raise InvalidParameterError(
            f"init must be one of {INIT_CHOICES}, got {config['init']!r}")
    return config


def _initial_state(config, grid, model):
    init = config["init"]
    if init == "random_spectrum":
        return spectral.random_spectrum_state(grid, model, seed=int(config["seed"]))
    if init == "single_mode":
        return spectral.single_mode_state(grid, model, (0, 1), 1e-3)
    triads = spectral.find_resonant_triads(grid, model, tol=1e-3,
                                           require_coupling=True)
    if not triads:
        raise RossbyBecError("no resonant triad found for the triad init")
    best = triads[0]
    (i1, j1), (i2, j2), _ = best.lattice
    return spectral.state_from_modes(grid, model,
                                     {(i1, j1): 1e-2 + 0.0j, (i2, j2): 1e-2 + 0.0j})


def _cmd_simulate(args):
    config = _simulate_config(args)
    out_dir = _ensure_out_dir(args.out_dir)
    grid = spectral.build_mode_grid(int(config["n_modes"]), float(config["k_max"]))
    model = ModelParams(v_r=float(config["v_r_over_cs"]),
                        xi=float(config["xi_over_r0"]))
    state = _initial_state(config, grid, model)
    dt = float(config["dt"])
    n_steps = max(1, int(round(float(config["t_final"]) / dt)))
    every = max(1, int(config["output_every"]))

    series = []
    energies = []
    spectra_rows = []

    def record(s):
        e, z, e_xi = diagnostics.energy_enstrophy(s)
        series.append((s.time, e, z, s.max_amplitude))
        energies.append((s.time, e, z, e_xi))
        if args.save_spectra:
            for (i, j) in grid.retained_modes():
                amp = s.amplitudes[grid.index_of(i, j)]
                spectra_rows.append((s.time, i * grid.spacing, j * grid.spacing,
                                     amp.real, amp.imag))

    record(state)
    done = 0
    while done < n_steps:
        chunk = min(every, n_steps - done)
        state = spectral.integrate(state, dt, chunk)
        done += chunk
        record(state)

    ts_path = os.path.join(out_dir, "timeseries.csv")
    write_csv(ts_path, ("t", "E", "Z", "max_amp"), series)
    write_csv(os.path.join(out_dir, "energies.csv"), ("t", "E", "Z", "E_xi"),
              energies)
    write_csv(os.path.join(out_dir, "zonal_spectrum.csv"), ("k_theta", "power"),
              diagnostics.zonal_spectrum(state))
    if args.save_spectra:
        write_csv(os.path.join(out_dir, "spectra.csv"),
                  ("t", "k_r", "k_theta", "re", "im"), spectra_rows)
    e0, z0 = series[0][1], series[0][2]
    e1, z1 = series[-1][1], series[-1][2]
    de = abs(e1 - e0) / e0 if e0 > 0 else 0.0
    dz = abs(z1 - z0) / z0 if z0 > 0 else 0.0
    print(f"wrote {ts_path}; reality drift {state.reality_drift:.3e}; "
          f"relative drift E {de:.3e}, Z {dz:.3e}")
    return 0


def _cmd_triad(args):
    grid = spectral.build_mode_grid(args.n_modes, args.k_max)
    model = ModelParams(v_r=args.v_r, xi=args.xi)
    triads = spectral.find_resonant_triads(grid, model, tol=args.tol,
                                           require_coupling=True)
    out_dir = _ensure_out_dir(args.out_dir)
    rows = [(t.k1.k_r, t.k1.k_theta, t.k2.k_r, t.k2.k_theta,
             t.k3.k_r, t.k3.k_theta, t.mismatch)
            for t in triads[: args.max_count]]
    path = os.path.join(out_dir, "triads.csv")
    write_csv(path, ("k1_r", "k1_theta", "k2_r", "k2_theta",
                     "k3_r", "k3_theta", "mismatch"), rows)
    print(f"wrote {path} ({len(rows)} of {len(triads)} triads, tol = {args.tol})")
    if not args.integrate:
        return 0
    if not triads:
        raise RossbyBecError(f"no resonant triad with tol = {args.tol}")
    best = triads[0]
    amps = (args.amplitude, args.amplitude, 0.0)
    times, history = spectral.integrate_triad(
        best, amps, model, dt=args.dt, t_final=args.t_final,
        sample_every=args.sample_every)
    traj_rows = [
        (t, h[0].real, h[0].imag, h[1].real, h[1].imag, h[2].real, h[2].imag)
        for t, h in zip(times, history)
    ]
    traj_path = os.path.join(out_dir, "triad_timeseries.csv")
    write_csv(traj_path, ("t", "re1", "im1", "re2", "im2", "re3", "im3"),
              traj_rows)
    print(f"wrote {traj_path} ({len(traj_rows)} samples)")
    return 0


# ---------------------------------------------------------------------------
# parser and dispatch
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="rossbybec",
        description="Rossby waves in rapidly rotating condensates: "
                    "dispersion scans, equilibria, stationary structures, "
                    "and spectral wave dynamics.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("dispersion", help="tabulate the dispersion relation")
    p.add_argument("--v-r", type=float, default=None, help="drift speed (c_s)")
    p.add_argument("--xi", type=str, default=None,
                   help="comma-separated healing lengths (r0), e.g. 0,0.7,1.3")
    p.add_argument("--k-max", type=float, default=5.0, help="largest k_theta (1/r0)")
    p.add_argument("--n-k", type=int, default=256, help="samples per curve")
    p.add_argument("--k-r", type=float, default=0.0, help="fixed radial wavenumber")
    p.add_argument("--params", type=str, default=None, help="JSON parameter file")
    p.add_argument("-o", "--out-dir", type=str, default=".")
    p.set_defaults(func=_cmd_dispersion)

    p = sub.add_parser("equilibrium", help="Thomas-Fermi radii and profile")
    p.add_argument("--omega-ratio", type=float, default=None, help="Omega/omega_perp")
    p.add_argument("--beta", type=float, default=None, help="trap anharmonicity")
    p.add_argument("--mu", type=float, default=None, help="mu (hbar*omega_perp)")
    p.add_argument("--n-r", type=int, default=256, help="radial samples")
    p.add_argument("--params", type=str, default=None, help="JSON parameter file")
    p.add_argument("-o", "--out-dir", type=str, default=".")
    p.set_defaults(func=_cmd_equilibrium)

    p = sub.add_parser("stationary", help="Bessel-mode stationary structure")
    p.add_argument("--omega-ratio", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--mu", type=float, default=None)
    p.add_argument("--mode-index", type=int, default=1, help="radial mode number")
    p.add_argument("--n-r", type=int, default=512, help="radial samples")
    p.add_argument("--params", type=str, default=None, help="JSON parameter file")
    p.add_argument("-o", "--out-dir", type=str, default=".")
    p.set_defaults(func=_cmd_stationary)

    p = sub.add_parser("simulate", help="integrate the spectral wave equation")
    p.add_argument("--config", type=str, default=None, help="JSON run config")
    p.add_argument("--n-modes", dest="n_modes", type=int, default=None)
    p.add_argument("--k-max", dest="k_max", type=float, default=None)
    p.add_argument("--xi", dest="xi_over_r0", type=float, default=None)
    p.add_argument("--v-r", dest="v_r_over_cs", type=float, default=None)
    p.add_argument("--dt", type=float, default=None)
    p.add_argument("--t-final", dest="t_final", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--init", type=str, default=None, choices=INIT_CHOICES)
    p.add_argument("--output-every", dest="output_every", type=int, default=None,
                   help="steps between recorded samples")
    p.add_argument("--save-spectra", action="store_true",
                   help="also write per-mode spectrum snapshots")
    p.add_argument("-o", "--out-dir", type=str, default=".")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("triad", help="find and integrate resonant triads")
    p.add_argument("--n-modes", type=int, default=16)
    p.add_argument("--k-max", type=float, default=8.0)
    p.add_argument("--v-r", type=float, default=0.1)
    p.add_argument("--xi", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-3, help="mismatch tolerance")
    p.add_argument("--max-count", type=int, default=50, help="triads to list")
    p.add_argument("--integrate", action="store_true",
                   help="integrate the best triad")
    p.add_argument("--dt", type=float, default=0.05)
    p.add_argument("--t-final", type=float, default=200.0)
    p.add_argument("--amplitude", type=float, default=1e-3)
    p.add_argument("--sample-every", type=int, default=10)
    p.add_argument("-o", "--out-dir", type=str, default=".")
    p.set_defaults(func=_cmd_triad)

    return parser


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InvalidParameterError as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 2
    except (RossbyBecError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"ERROR: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()

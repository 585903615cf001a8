"""Truncated Fourier dynamics of the nonlinear drift-wave equation.

Internal units set r0 = 1 and c_s = 1, hence 2*Omega = 1 (Omega = 1/2) and
the coupling prefactor 2 r0^2 Omega collapses to 1.  The field is real,

    phi(x) = sum_k phi_k exp(i k.x),    phi_{-k} = conj(phi_k),

on a square integer lattice of n_modes points per axis with FFT ordering and
spacing 2*k_max/n_modes.  The 2/3-rule mask removes every mode with any
component beyond (2/3) k_max; retained modes evolve by

    d phi_k/dt = -i omega_k phi_k
                 + sum_{k1+k2=k} L(k1,k2,k) phi_{k1} phi_{k2}

with the ordered-pair sum running over retained modes only (Galerkin
truncation).  The convolution is evaluated two ways: a brute-force pair sum
(:func:`rhs_direct`, the testing oracle) and a zero-padded FFT convolution
(:func:`rhs`, used by the integrator).  Zero padding to twice the lattice
makes the transform convolution exact, so the two agree to rounding on any
grid size.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from . import dispersion
from .dispersion import ModelParams, WaveVector
from .errors import (
    CorruptedStateError,
    DivergenceError,
    InvalidParameterError,
    StepSizeError,
)


@dataclass(frozen=True)
class ModeGrid:
    """Square truncated mode lattice in FFT ordering.

    lattice : integer frequencies per axis, [0 .. n/2-1, -n/2 .. -1]
    spacing : physical mode spacing 2*k_max/n_modes (1/r0)
    k_r, k_theta : (n, n) component arrays; axis 0 is radial, axis 1 zonal
    dealias_mask : True for retained modes (|component| <= (2/3) k_max)
    """

    n_modes: int
    k_max: float
    spacing: float
    lattice: np.ndarray
    k_r: np.ndarray
    k_theta: np.ndarray
    dealias_mask: np.ndarray

    @property
    def cutoff_index(self):
        """Largest retained |integer frequency| under the 2/3 rule."""
        return self.n_modes // 3

    def index_of(self, i, j):
        """Array index of the integer lattice mode (i, j)."""
        n = self.n_modes
        if not (-n // 2 <= i < n // 2 and -n // 2 <= j < n // 2):
            raise InvalidParameterError(f"lattice mode ({i}, {j}) outside the grid")
        return i % n, j % n

    def retained_modes(self):
        """Integer lattice coordinates of retained modes, lex-sorted."""
        cut = self.cutoff_index
        return [(i, j) for i in range(-cut, cut + 1) for j in range(-cut, cut + 1)]


def build_mode_grid(n_modes: int, k_max: float) -> ModeGrid:
    """Enumerate the n_modes x n_modes lattice with the 2/3 dealias mask."""
    if n_modes < 8 or n_modes % 2 != 0:
        raise InvalidParameterError(f"n_modes must be even and >= 8, got {n_modes}")
    if not k_max > 0:
        raise InvalidParameterError(f"k_max must be > 0, got {k_max}")
    lattice = (np.fft.fftfreq(n_modes) * n_modes).astype(int)
    spacing = 2.0 * k_max / n_modes
    k_r = (lattice * spacing)[:, None] * np.ones(n_modes)[None, :]
    k_theta = np.ones(n_modes)[:, None] * (lattice * spacing)[None, :]
    cut = n_modes // 3  # |i| <= n/3  <=>  |k_i| <= (2/3) k_max
    keep = np.abs(lattice) <= cut
    mask = keep[:, None] & keep[None, :]
    return ModeGrid(n_modes=n_modes, k_max=float(k_max), spacing=spacing,
                    lattice=lattice, k_r=k_r, k_theta=k_theta,
                    dealias_mask=mask)


@dataclass(frozen=True)
class SpectralState:
    """Complex mode amplitudes on a :class:`ModeGrid` at one instant.

    Invariants: conj-symmetric amplitudes, zero outside the dealias mask,
    finite everywhere.  ``reality_drift`` records the largest asymmetry the
    integrator has re-symmetrized away so far.
    """

    grid: ModeGrid
    params: ModelParams
    amplitudes: np.ndarray
    time: float = 0.0
    seed: int | None = None
    reality_drift: float = 0.0

    @property
    def max_amplitude(self):
        return float(np.max(np.abs(self.amplitudes)))


def _negation_index(n):
    return (-np.arange(n)) % n


def symmetrize(grid: ModeGrid, amps: np.ndarray) -> np.ndarray:
    """Project amplitudes onto the reality constraint phi_{-k} = conj(phi_k)."""
    neg = _negation_index(grid.n_modes)
    return 0.5 * (amps + np.conj(amps[np.ix_(neg, neg)]))


def reality_violation(grid: ModeGrid, amps: np.ndarray) -> float:
    """Max-norm distance from the conjugate-symmetric subspace."""
    return float(np.max(np.abs(amps - symmetrize(grid, amps))))


def state_from_modes(grid: ModeGrid, params: ModelParams, modes,
                     time=0.0, seed=None) -> SpectralState:
    """State with given amplitudes on integer lattice modes, conjugates added.

    ``modes`` maps (i, j) integer lattice coordinates to complex amplitudes;
    each entry also sets the mirror mode to the conjugate value.
    """
    amps = np.zeros((grid.n_modes, grid.n_modes), dtype=complex)
    for (i, j), value in modes.items():
        ii, jj = grid.index_of(i, j)
        if not grid.dealias_mask[ii, jj]:
            raise InvalidParameterError(f"mode ({i}, {j}) is masked by the 2/3 rule")
        amps[ii, jj] = value
        mi, mj = grid.index_of(-i, -j)
        if (mi, mj) != (ii, jj):
            amps[mi, mj] = np.conj(value)
        elif value.imag != 0:
            raise InvalidParameterError(f"self-conjugate mode ({i}, {j}) must be real")
    return SpectralState(grid=grid, params=params, amplitudes=amps,
                         time=time, seed=seed)


def single_mode_state(grid: ModeGrid, params: ModelParams, mode,
                      amplitude) -> SpectralState:
    """State with one excited lattice mode (plus its conjugate partner)."""
    return state_from_modes(grid, params, {tuple(mode): complex(amplitude)})


def random_spectrum_state(grid: ModeGrid, params: ModelParams, seed: int,
                          k_peak=None, amplitude=0.05) -> SpectralState:
    """Seeded random initial spectrum |phi_k| ~ k exp(-k^2/(2 k_peak^2)).

    Phases are uniform from ``numpy.random.default_rng(seed)``; amplitudes are
    rescaled so the largest retained mode has modulus ``amplitude``.  Reality
    is exact by construction (one half-plane drawn, mirror conjugated) and the
    seed is recorded on the state.
    """
    if k_peak is None:
        k_peak = grid.k_max / 3.0
    rng = np.random.default_rng(seed)
    phases = rng.uniform(0.0, 2.0 * math.pi, size=(grid.n_modes, grid.n_modes))
    k2 = grid.k_r**2 + grid.k_theta**2
    mags = np.sqrt(k2) * np.exp(-k2 / (2.0 * k_peak**2))
    mags[~grid.dealias_mask] = 0.0
    peak = mags.max()
    if peak > 0:
        mags *= amplitude / peak
    amps = np.zeros((grid.n_modes, grid.n_modes), dtype=complex)
    cut = grid.cutoff_index
    for i in range(-cut, cut + 1):
        for j in range(-cut, cut + 1):
            if i < 0 or (i == 0 and j <= 0):
                continue  # half-plane only; mirrors set below
            ii, jj = grid.index_of(i, j)
            amps[ii, jj] = mags[ii, jj] * np.exp(1j * phases[ii, jj])
            mi, mj = grid.index_of(-i, -j)
            amps[mi, mj] = np.conj(amps[ii, jj])
    return SpectralState(grid=grid, params=params, amplitudes=amps, seed=seed)


# ---------------------------------------------------------------------------
# coupling coefficient and right-hand side
# ---------------------------------------------------------------------------

def _vec(k):
    return k if isinstance(k, WaveVector) else WaveVector(*k)


def _shape_factors(k2, xi):
    # a(k) = 1 + xi^2 k^2/2 ; c(k) = 1 + k^2 + xi^2 k^4/2 = 1 + k^2 a(k)
    a = 1.0 + 0.5 * xi**2 * k2
    return a, 1.0 + k2 * a


def coupling(k1, k2, k, params: ModelParams) -> float:
    """Nonlinear coupling coefficient L(k1, k2 -> k), zero unless k1+k2 = k.

    In internal units (r0 = 1, Omega = 1/2):

        L = (k2 x k1)_z (1 + xi^2 k1^2/2)(1 + k2^2 + xi^2 k2^4/2)
            / (1 + k^2 + xi^2 k^4/2).
    """
    k1, k2, k = _vec(k1), _vec(k2), _vec(k)
    tol = 1e-9 * max(1.0, abs(k.k_r), abs(k.k_theta))
    if (abs(k1.k_r + k2.k_r - k.k_r) > tol
            or abs(k1.k_theta + k2.k_theta - k.k_theta) > tol):
        return 0.0
    cross = k2.k_r * k1.k_theta - k2.k_theta * k1.k_r
    a1, _ = _shape_factors(k1.k2, params.xi)
    _, c2 = _shape_factors(k2.k2, params.xi)
    _, ck = _shape_factors(k.k2, params.xi)
    return cross * a1 * c2 / ck


def net_coupling(k1, k2, k, params: ModelParams) -> float:
    """Symmetrized pair coupling L(k1,k2,k) + L(k2,k1,k)."""
    return coupling(k1, k2, k, params) + coupling(k2, k1, k, params)


def _check_finite(amps):
    if not np.all(np.isfinite(amps.real)) or not np.all(np.isfinite(amps.imag)):
        raise CorruptedStateError("state amplitudes contain NaN or Inf")


class _RhsOperator:
    """Precomputed arrays for repeated rhs evaluation on one (grid, params)."""

    def __init__(self, grid: ModeGrid, params: ModelParams):
        self.grid = grid
        self.params = params
        k2 = grid.k_r**2 + grid.k_theta**2
        self.a, self.c = _shape_factors(k2, params.xi)
        self.omega = dispersion.omega_values(grid.k_r, grid.k_theta, params)
        self.omega[~grid.dealias_mask] = 0.0
        n = grid.n_modes
        self.pad_n = 2 * n
        self.pad_slots = grid.lattice % self.pad_n  # collision-free: pad >= 2n

    def _convolve(self, f, g):
        # exact linear convolution of lattice coefficients via zero padding
        m = self.pad_n
        fp = np.zeros((m, m), dtype=complex)
        gp = np.zeros((m, m), dtype=complex)
        ix = np.ix_(self.pad_slots, self.pad_slots)
        fp[ix] = f
        gp[ix] = g
        prod = np.fft.ifft2(fp) * np.fft.ifft2(gp)
        return (m * m) * np.fft.fft2(prod)[ix]

    def nonlinear(self, amps):
        """sum_{k1+k2=k} L(k1,k2,k) phi_{k1} phi_{k2} over retained modes.

        Factorizes the cross product: with A_i = k_i a(k) phi_k in the k1 role
        and B_i = k_i c(k) phi_k in the k2 role, the pair sum for every output
        k is [conv(A_theta, B_r) - conv(A_r, B_theta)](k) / c(k).
        """
        phi = np.where(self.grid.dealias_mask, amps, 0.0)
        a_phi = self.a * phi
        c_phi = self.c * phi
        conv = (self._convolve(self.grid.k_theta * a_phi, self.grid.k_r * c_phi)
                - self._convolve(self.grid.k_r * a_phi, self.grid.k_theta * c_phi))
        return np.where(self.grid.dealias_mask, conv / self.c, 0.0)

    def __call__(self, amps):
        return np.where(self.grid.dealias_mask,
                        -1j * self.omega * amps + self.nonlinear(amps), 0.0)


def rhs(state: SpectralState) -> np.ndarray:
    """Time derivative of every mode amplitude (FFT convolution path)."""
    _check_finite(state.amplitudes)
    return _RhsOperator(state.grid, state.params)(state.amplitudes)


def rhs_direct(state: SpectralState, n_workers: int = 1) -> np.ndarray:
    """Brute-force ordered-pair-sum time derivative (testing oracle).

    Accumulates each output mode's pair sum in a fixed lexicographic order,
    so results are bit-identical for any ``n_workers``.
    """
    _check_finite(state.amplitudes)
    grid, params = state.grid, state.params
    amps = np.where(grid.dealias_mask, state.amplitudes, 0.0)
    retained = grid.retained_modes()
    cut = grid.cutoff_index
    op = _RhsOperator(grid, params)
    out = np.zeros_like(amps)

    def fill(target_modes):
        for (oi, oj) in target_modes:
            o_idx = grid.index_of(oi, oj)
            k = WaveVector(oi * grid.spacing, oj * grid.spacing)
            acc = 0.0 + 0.0j
            for (i1, j1) in retained:
                i2, j2 = oi - i1, oj - j1
                if abs(i2) > cut or abs(j2) > cut:
                    continue
                k1 = WaveVector(i1 * grid.spacing, j1 * grid.spacing)
                k2 = WaveVector(i2 * grid.spacing, j2 * grid.spacing)
                acc += (coupling(k1, k2, k, params)
                        * amps[grid.index_of(i1, j1)] * amps[grid.index_of(i2, j2)])
            out[o_idx] = -1j * op.omega[o_idx] * amps[o_idx] + acc

    if n_workers <= 1:
        fill(retained)
    else:
        chunks = [retained[i::n_workers] for i in range(n_workers)]
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            list(pool.map(fill, chunks))
    return out


# ---------------------------------------------------------------------------
# time integration (classical RK4, fixed step)
# ---------------------------------------------------------------------------

def _rk4_step(f, y, dt):
    k1 = f(y)
    k2 = f(y + 0.5 * dt * k1)
    k3 = f(y + 0.5 * dt * k2)
    k4 = f(y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate(state: SpectralState, dt: float, n_steps: int) -> SpectralState:
    """Advance the state by n_steps of classical RK4 with step dt.

    Guards: dt * max|omega_k| must stay below 0.5; overflow raises
    :class:`DivergenceError` with the offending step index.  The reality
    constraint is re-projected every step and the largest drift removed is
    accumulated into ``reality_drift``.
    """
    if not dt > 0:
        raise InvalidParameterError(f"dt must be > 0, got {dt}")
    if n_steps < 0:
        raise InvalidParameterError(f"n_steps must be >= 0, got {n_steps}")
    _check_finite(state.amplitudes)
    op = _RhsOperator(state.grid, state.params)
    w_max = float(np.max(np.abs(op.omega)))
    if dt * w_max >= 0.5:
        raise StepSizeError(
            f"dt*max|omega| = {dt * w_max:.3g} >= 0.5; reduce the step"
        )
    amps = np.where(state.grid.dealias_mask, state.amplitudes, 0.0)
    drift = state.reality_drift
    for step in range(n_steps):
        amps = _rk4_step(op, amps, dt)
        if not np.all(np.isfinite(amps)):
            raise DivergenceError(step)
        projected = symmetrize(state.grid, amps)
        drift = max(drift, float(np.max(np.abs(amps - projected))))
        amps = np.where(state.grid.dealias_mask, projected, 0.0)
    return replace(state, amplitudes=amps, time=state.time + n_steps * dt,
                   reality_drift=drift)


# ---------------------------------------------------------------------------
# resonant triads
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Triad:
    """Lattice-closed mode triple k1 + k2 = k3 with its frequency mismatch."""

    k1: WaveVector
    k2: WaveVector
    k3: WaveVector
    mismatch: float
    lattice: tuple = field(default=(), compare=False)


def find_resonant_triads(grid: ModeGrid, params: ModelParams, tol,
                         require_coupling: bool = False):
    """All retained triples k1 + k2 = k3 with |w1 + w2 - w3| <= tol.

    Pairs are unordered ((k1, k2) lex-canonical, k1 = k2 allowed); with
    ``require_coupling`` collinear pairs (zero cross product, hence zero
    coupling) are dropped.  The result is sorted by mismatch, then by the
    integer lattice coordinates, so ordering is fully deterministic.
    """
    if tol < 0:
        raise InvalidParameterError(f"tol must be >= 0, got {tol}")
    retained = grid.retained_modes()
    cut = grid.cutoff_index
    w = {}
    mp = ModelParams(v_r=params.v_r, xi=params.xi)
    for (i, j) in retained:
        w[(i, j)] = float(dispersion.omega_values(i * grid.spacing,
                                                  j * grid.spacing, mp))
    triads = []
    for a in range(len(retained)):
        i1, j1 = retained[a]
        for b in range(a, len(retained)):
            i2, j2 = retained[b]
            i3, j3 = i1 + i2, j1 + j2
            if abs(i3) > cut or abs(j3) > cut:
                continue
            if require_coupling and (i2 * j1 - j2 * i1) == 0:
                continue
            mism = abs(w[(i1, j1)] + w[(i2, j2)] - w[(i3, j3)])
            if mism <= tol:
                triads.append(Triad(
                    k1=WaveVector(i1 * grid.spacing, j1 * grid.spacing),
                    k2=WaveVector(i2 * grid.spacing, j2 * grid.spacing),
                    k3=WaveVector(i3 * grid.spacing, j3 * grid.spacing),
                    mismatch=mism,
                    lattice=((i1, j1), (i2, j2), (i3, j3)),
                ))
    triads.sort(key=lambda t: (t.mismatch, t.lattice))
    return triads


def _triad_terms(triad: Triad, params: ModelParams):
    # six conjugate-paired modes; amplitude ids 0..2 -> phi_i, 3..5 -> conj(phi_i)
    vecs = [triad.k1, triad.k2, triad.k3]
    modes = [(v, idx) for idx, v in enumerate(vecs)]
    modes += [(WaveVector(-v.k_r, -v.k_theta), idx + 3) for idx, v in enumerate(vecs)]
    terms = [[] for _ in range(3)]
    tol = 1e-9
    for t, target in enumerate(vecs):
        for va, ida in modes:
            for vb, idb in modes:
                if (abs(va.k_r + vb.k_r - target.k_r) > tol
                        or abs(va.k_theta + vb.k_theta - target.k_theta) > tol):
                    continue
                coeff = coupling(va, vb, target, params)
                if coeff != 0.0:
                    terms[t].append((coeff, ida, idb))
    return terms


def integrate_triad(triad: Triad, initial_amplitudes, params: ModelParams,
                    dt: float, t_final: float, sample_every: int = 1):
    """Integrate the closed three-mode system; returns (times, amplitudes).

    The system is the full evolution equation restricted to the six modes
    {+-k1, +-k2, +-k3} with the reality constraint eliminating the mirrors,
    so each amplitude is driven by every ordered pair of set members summing
    to its wave vector (conjugating mirror-mode factors).  Sampling keeps one
    row per ``sample_every`` steps plus the initial condition.
    """
    if not dt > 0:
        raise InvalidParameterError(f"dt must be > 0, got {dt}")
    if sample_every < 1:
        raise InvalidParameterError("sample_every must be >= 1")
    omega = np.array([dispersion.omega(k, params)
                      for k in (triad.k1, triad.k2, triad.k3)])
    if dt * float(np.max(np.abs(omega))) >= 0.5:
        raise StepSizeError("dt*max|omega| >= 0.5; reduce the step")
    terms = _triad_terms(triad, params)

    def deriv(phi):
        values = np.concatenate([phi, np.conj(phi)])
        out = -1j * omega * phi
        for t in range(3):
            acc = 0.0 + 0.0j
            for coeff, ida, idb in terms[t]:
                acc += coeff * values[ida] * values[idb]
            out[t] += acc
        return out

    n_steps = max(1, int(round(t_final / dt)))
    phi = np.asarray(initial_amplitudes, dtype=complex).copy()
    if phi.shape != (3,):
        raise InvalidParameterError("initial_amplitudes must have length 3")
    times = [0.0]
    history = [phi.copy()]
    for step in range(n_steps):
        phi = _rk4_step(deriv, phi, dt)
        if not np.all(np.isfinite(phi)):
            raise DivergenceError(step)
        if (step + 1) % sample_every == 0 or step == n_steps - 1:
            times.append((step + 1) * dt)
            history.append(phi.copy())
    return np.array(times), np.array(history)

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rossbybec import ModelParams, WaveVector, dispersion_scan, group_velocity, omega
from rossbybec.dispersion import (
    SCAN_COLUMNS,
    omega_values,
    short_wavelength_group_velocity,
    short_wavelength_phase_speed,
    zonal_phase_speed,
)
from rossbybec.errors import InvalidParameterError, UndefinedGradientError

M_TF = ModelParams(v_r=0.1, xi=0.0)


class TestOmega:
    def test_zero_zonal_component(self):
        for k_r in (0.0, 0.5, 3.0):
            assert omega(WaveVector(k_r, 0.0), M_TF) == 0.0

    def test_tf_value(self):
        assert omega(WaveVector(0, 1), M_TF) == pytest.approx(-0.05, abs=1e-15)

    def test_quantum_pressure_value(self):
        m = ModelParams(v_r=0.1, xi=1.3)
        # -0.1 * 1.845 / 2.845, frozen
        assert omega(WaveVector(0, 1), m) == pytest.approx(
            -0.0648506151142355, abs=1e-15)

    @settings(deadline=None, max_examples=200, derandomize=True)
    @given(k_r=st.floats(-5, 5), k_theta=st.floats(-5, 5),
           xi=st.floats(0, 2), v_r=st.floats(-1, 1))
    def test_odd_in_zonal_wavenumber(self, k_r, k_theta, xi, v_r):
        m = ModelParams(v_r=v_r, xi=xi)
        assert omega(WaveVector(k_r, -k_theta), m) == pytest.approx(
            -omega(WaveVector(k_r, k_theta), m), rel=1e-12, abs=1e-300)

    def test_xi_monotonicity_at_unit_k(self):
        values = [abs(omega(WaveVector(0, 1), ModelParams(v_r=0.1, xi=xi)))
                  for xi in np.linspace(0, 2.0, 9)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_tf_limit_recovers_standard_form(self):
        ks = np.linspace(-4, 4, 41)
        kr, kt = np.meshgrid(ks, ks)
        got = omega_values(kr, kt, M_TF)
        std = -M_TF.v_r * kt / (1.0 + kr**2 + kt**2)
        np.testing.assert_allclose(got, std, rtol=4e-16, atol=1e-18)

    def test_phase_speed_negative(self):
        for k in (WaveVector(0.3, 0.7), WaveVector(0, 2.5), WaveVector(1, -1)):
            for xi in (0.0, 0.7, 1.3):
                c = zonal_phase_speed(k, ModelParams(v_r=0.1, xi=xi))
                assert c < 0

    def test_phase_speed_nan_at_zero_zonal(self):
        assert math.isnan(zonal_phase_speed(WaveVector(1, 0), M_TF))


class TestGroupVelocity:
    @pytest.mark.parametrize("xi", [0.0, 0.7, 1.3])
    @pytest.mark.parametrize("k", [(0.3, 0.8), (1.5, -0.4), (0.0, 2.0), (2.2, 2.2)])
    def test_matches_finite_differences(self, k, xi):
        m = ModelParams(v_r=0.1, xi=xi)
        kv = WaveVector(*k)
        cg_r, cg_t = group_velocity(kv, m)
        h = 1e-5
        fd_r = (omega(WaveVector(k[0] + h, k[1]), m)
                - omega(WaveVector(k[0] - h, k[1]), m)) / (2 * h)
        fd_t = (omega(WaveVector(k[0], k[1] + h), m)
                - omega(WaveVector(k[0], k[1] - h), m)) / (2 * h)
        scale = max(abs(fd_r), abs(fd_t))
        assert cg_r == pytest.approx(fd_r, abs=1e-6 * scale)
        assert cg_t == pytest.approx(fd_t, abs=1e-6 * scale)

    def test_long_wavelength_zonal_limit(self):
        # dw/dk_theta -> -v_r as k -> 0
        _, cg_t = group_velocity(WaveVector(0, 1e-6), M_TF)
        assert cg_t == pytest.approx(-M_TF.v_r, rel=1e-9)

    def test_short_wavelength_zonal_growth(self):
        # at k_r = 0 and k_theta^2 >> 1 the zonal group velocity tends to
        # +v_r/k^2: compare against the asymptote at large k
        k = WaveVector(0, 40.0)
        _, cg_t = group_velocity(k, M_TF)
        assert cg_t == pytest.approx(M_TF.v_r / k.k2, rel=5e-3)

    def test_asymptotic_forms_coincide_only_on_axis(self):
        # zonal-only propagation: both short-wavelength estimates agree
        k = WaveVector(0, 10.0)
        printed, gradient = short_wavelength_group_velocity(k, M_TF)
        assert printed == pytest.approx(gradient, rel=1e-12)
        # off axis they differ: (2 k_theta/k - 1) vs (2 k_theta^2/k^2 - 1)
        k = WaveVector(6.0, 8.0)
        printed, gradient = short_wavelength_group_velocity(k, M_TF)
        assert printed != pytest.approx(gradient, rel=1e-3)
        expected_printed = M_TF.v_r * (2 * 0.8 - 1) / k.k2
        assert printed == pytest.approx(expected_printed, rel=1e-12)

    def test_asymptotic_phase_speed(self):
        k = WaveVector(0, 10.0)
        assert short_wavelength_phase_speed(k, M_TF) == pytest.approx(
            -M_TF.v_r / 100.0)
        assert zonal_phase_speed(k, M_TF) == pytest.approx(
            short_wavelength_phase_speed(k, M_TF), rel=1e-2)

    def test_undefined_at_origin(self):
        with pytest.raises(UndefinedGradientError):
            group_velocity(WaveVector(0, 0), M_TF)
        with pytest.raises(UndefinedGradientError):
            short_wavelength_phase_speed(WaveVector(0, 0), M_TF)


class TestScan:
    def test_empty_range_rejected(self):
        with pytest.raises(InvalidParameterError):
            dispersion_scan([], M_TF)

    def test_single_element(self):
        rows = dispersion_scan([WaveVector(0.0, 1.0)], M_TF)
        assert len(rows) == 1
        assert rows[0][2] == omega(WaveVector(0, 1), M_TF)
        assert len(rows[0]) == len(SCAN_COLUMNS)

    def test_ordering_matches_input(self):
        ks = [WaveVector(0, kt) for kt in (3.0, 1.0, 2.0)]
        rows = dispersion_scan(ks, M_TF)
        assert [r[1] for r in rows] == [3.0, 1.0, 2.0]

    def test_tf_extremum_by_dense_scan(self):
        # independent oracle: dense numeric scan of |omega| along the zonal axis
        kt = np.linspace(0, 5, 200001)
        w = np.abs(omega_values(np.zeros_like(kt), kt, M_TF))
        i = int(np.argmax(w))
        assert w[i] == pytest.approx(M_TF.v_r / 2, abs=1e-9)
        assert kt[i] == pytest.approx(1.0, abs=1e-4)
        # the analytic surface attains the scan maximum at exactly k=(0,1)
        assert abs(omega(WaveVector(0, 1), M_TF)) >= w[i] - 1e-12

    def test_three_family_scan_nonpositive(self):
        kts = np.linspace(0, 5, 101)
        for xi in (0.0, 0.7, 1.3):
            m = ModelParams(v_r=0.1, xi=xi)
            rows = dispersion_scan([WaveVector(0, kt) for kt in kts], m)
            assert all(r[2] <= 0 for r in rows)

    def test_accepts_plain_tuples(self):
        rows = dispersion_scan([(0.0, 1.0)], M_TF)
        assert rows[0][2] == pytest.approx(-0.05)

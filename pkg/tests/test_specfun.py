"""Special function values against series oracles and identities."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (fd_first, j0_first_zero, j0_series, j1_series, k0_series,
                     k_imag_quadrature)
from wedgewave import specfun as sf
from wedgewave.errors import DomainError, PoleError, UnderflowWarning

# frozen from the series oracles in oracles.py
J0_AT_1 = 0.7651976865579666
J1_AT_1 = 0.44005058574493355
J0_FIRST_ZERO = 2.404825557695773
K0_AT_1 = 0.4210244382407083


class TestBesselJ:
    def test_j0_at_zero(self):
        assert sf.bessel_j0(0.0) == 1.0

    def test_j0_at_one_frozen(self):
        assert sf.bessel_j0(1.0) == pytest.approx(J0_AT_1, abs=1e-14)
        assert j0_series(1.0) == pytest.approx(J0_AT_1, abs=1e-15)

    def test_first_zero(self):
        assert abs(sf.bessel_j0(J0_FIRST_ZERO)) < 1e-12
        assert sf.j0_zero(1) == pytest.approx(j0_first_zero(), abs=1e-13)

    def test_j1_odd_and_zero(self):
        assert sf.bessel_j1(0.0) == 0.0
        assert sf.bessel_j1(-1.0) == -sf.bessel_j1(1.0)

    def test_j1_at_one_frozen(self):
        assert sf.bessel_j1(1.0) == pytest.approx(J1_AT_1, abs=1e-14)

    def test_j1_over_x_limit(self):
        assert sf.bessel_j1_over_x(0.0) == 0.5

    def test_series_oracle_sweep(self):
        for x in np.linspace(0.0, 12.0, 49):
            assert sf.bessel_j0(float(x)) == pytest.approx(
                j0_series(float(x)), abs=1e-13)
            assert sf.bessel_j1(float(x)) == pytest.approx(
                j1_series(float(x)), abs=1e-13)

    def test_seam_continuity(self):
        # the series/asymptotic seam sits at x = 8
        left = sf.bessel_j0(8.0 - 1e-9)
        right = sf.bessel_j0(8.0 + 1e-9)
        assert abs(left - right) < 1e-12

    def test_amplitude_bound(self):
        xs = np.linspace(0.0, 500.0, 2001)
        assert np.all(np.abs(sf.bessel_j0(xs)) <= 1.0 + 1e-15)
        assert np.all(np.abs(sf.bessel_j1(xs)) <= 0.6)

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            sf.bessel_j0(np.nan)

    @given(st.floats(min_value=0.0, max_value=100.0))
    @settings(max_examples=60, deadline=None)
    def test_pythagorean_bound(self, x):
        assert sf.bessel_j0(x) ** 2 + sf.bessel_j1(x) ** 2 <= 1.0 + 1e-12

    @given(st.floats(min_value=0.1, max_value=100.0))
    @settings(max_examples=40, deadline=None)
    def test_derivative_recurrence(self, x):
        # J0' = -J1 under central differences at step 1e-4
        d = fd_first(sf.bessel_j0, x, 1e-4)
        assert d == pytest.approx(-sf.bessel_j1(x), abs=1e-8)

    def test_zero_tables(self):
        for k in (1, 5, 50, 200, 250):
            assert abs(sf.bessel_j0(sf.j0_zero(k))) < 5e-13
            assert abs(sf.bessel_j1(sf.j1_zero(k))) < 5e-13

    def test_zeros_interlace(self):
        for k in range(1, 30):
            assert sf.j0_zero(k) < sf.j1_zero(k) < sf.j0_zero(k + 1)


class TestGamma:
    def test_integers(self):
        assert sf.gamma_complex(1.0) == pytest.approx(1.0, rel=1e-13)
        assert sf.gamma_complex(5.0) == pytest.approx(24.0, rel=1e-13)

    def test_half(self):
        assert sf.gamma_complex(0.5).real == pytest.approx(
            math.sqrt(math.pi), rel=1e-13)

    def test_pole_error_carries_integer(self):
        with pytest.raises(PoleError) as err:
            sf.gamma_complex(-2.0)
        assert err.value.pole == -2

    def test_recurrence(self):
        z = 1.3 + 0.7j
        assert sf.gamma_complex(z + 1) == pytest.approx(
            z * sf.gamma_complex(z), rel=1e-12)

    def test_reflection_left_half(self):
        z = -1.3 + 2.2j
        lhs = sf.gamma_complex(z) * sf.gamma_complex(1 - z)
        rhs = math.pi / np.sin(math.pi * z)
        assert lhs == pytest.approx(rhs, rel=1e-11)

    @given(st.floats(min_value=-20.0, max_value=20.0))
    @settings(max_examples=80, deadline=None)
    def test_modulus_identity_on_critical_line(self, tau):
        # |Gamma(1/2 + i tau)|^2 cosh(pi tau) = pi
        lg = sf.loggamma_complex(0.5 + 1j * tau)
        a = abs(math.pi * tau)
        log_cosh = a + math.log1p(math.exp(-2.0 * a)) - math.log(2.0)
        assert math.exp(2.0 * lg.real + log_cosh - math.log(math.pi)) == \
            pytest.approx(1.0, abs=1e-10)


class TestKBessel:
    def test_k0_frozen_value(self):
        assert sf.bessel_k_imag_order(0.0, 1.0) == pytest.approx(
            K0_AT_1, abs=1e-10)
        assert k0_series(1.0) == pytest.approx(K0_AT_1, abs=1e-13)

    def test_even_in_gamma(self):
        assert sf.bessel_k_imag_order(2.0, 3.0) == \
            sf.bessel_k_imag_order(-2.0, 3.0)

    def test_decay_bound(self):
        assert sf.bessel_k_imag_order(1.0, 20.0) <= 10.0 * math.exp(-20.0)

    def test_against_series_oracle_gamma0(self):
        for x in (0.05, 0.5, 1.0, 3.0, 7.0):
            assert sf.bessel_k_imag_order(0.0, x) == pytest.approx(
                k0_series(x), abs=1e-9)

    def test_against_quadrature_oracle(self):
        for gamma, x in ((0.5, 0.3), (2.0, 3.0), (7.0, 10.0), (10.0, 30.0)):
            assert sf.bessel_k_imag_order(gamma, x) == pytest.approx(
                k_imag_quadrature(gamma, x), abs=1e-9)

    def test_domain_and_underflow(self):
        with pytest.raises(DomainError):
            sf.bessel_k_imag_order(1.0, -1.0)
        with pytest.warns(UnderflowWarning):
            assert sf.bessel_k_imag_order(1.0, 800.0) == 0.0

    def test_half_order_closed_form_at_gamma0(self):
        # K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
        for x in (0.3, 1.0, 4.0):
            want = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
            got = sf.bessel_k_half_order(0.0, x)
            assert got.real == pytest.approx(want, rel=1e-11)
            assert got.imag == 0.0

    def test_half_order_derivative_consistent(self):
        x, g = 2.0, 1.5
        fd = fd_first(lambda t: sf.bessel_k_half_order(g, t).real, x, 1e-4)
        assert sf.bessel_k_half_order_dx(g, x).real == pytest.approx(fd, abs=1e-9)


class TestMultipliers:
    def test_chi_at_zero(self):
        assert sf.chi_multiplier(0.0) == pytest.approx(1.0 + 0.0j, abs=1e-13)

    def test_chi_unit_modulus(self):
        assert abs(abs(sf.chi_multiplier(1.0)) - 1.0) < 1e-12

    @given(st.floats(min_value=-30.0, max_value=30.0))
    @settings(max_examples=60, deadline=None)
    def test_chi_conjugate_symmetry(self, tau):
        a = sf.chi_multiplier(tau)
        b = sf.chi_multiplier(-tau)
        assert np.angle(a) == pytest.approx(-np.angle(b), abs=1e-11)
        assert abs(a * b - 1.0) < 1e-12

    def test_scatter_at_zero(self):
        assert sf.scatter_S(0.0) == pytest.approx(1.0 + 0.0j, abs=1e-13)

    def test_scatter_arg_odd(self):
        g = 1.7
        assert np.angle(sf.scatter_S(g)) == pytest.approx(
            -np.angle(sf.scatter_S(-g)), abs=1e-12)

    def test_scatter_arg_from_gamma_oracle(self):
        want = -2.0 * np.angle(sf.gamma_complex(0.5 + 1j))
        assert np.angle(sf.scatter_S(1.0)) == pytest.approx(want, abs=1e-12)

    def test_scatter_equals_chi_pointwise(self):
        # algebraic identity between the two multiplier formulas
        for tau in np.linspace(-5, 5, 11):
            assert abs(sf.scatter_S(tau) - sf.chi_multiplier(tau)) < 1e-10

    def test_hankel0_at_zero_and_modulus(self):
        assert sf.hankel0_multiplier(0.0) == pytest.approx(1.0 + 0j, abs=1e-12)
        assert abs(abs(sf.hankel0_multiplier(3.0)) - 1.0) < 1e-12

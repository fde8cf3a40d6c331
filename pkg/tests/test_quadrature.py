"""Quadrature engine: closed forms, hint plumbing, zero splitting."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_bessel_transform
from wedgewave.errors import AccuracyError, DomainError, HintError
from wedgewave.quadrature import (DecayHint, integrate, integrate_bessel_kernel,
                                  integrate_semi_infinite)


class TestIntegrate:
    def test_constant(self):
        assert integrate(lambda x: np.ones_like(x), 0, 1, 1e-12).value == \
            pytest.approx(1.0, abs=1e-12)

    def test_sine(self):
        assert integrate(np.sin, 0, math.pi, 1e-12).value == \
            pytest.approx(2.0, abs=1e-12)

    def test_square(self):
        assert integrate(lambda x: x**2, 0, 3, 1e-12).value == \
            pytest.approx(9.0, abs=1e-12)

    def test_scalar_callable_is_wrapped(self):
        assert integrate(math.sin, 0, math.pi, 1e-10).value == \
            pytest.approx(2.0, abs=1e-10)

    def test_empty_interval(self):
        r = integrate(np.sin, 2.0, 2.0, 1e-10)
        assert r.value == 0.0

    def test_result_invariants(self):
        r = integrate(np.cos, 0, 1, 1e-10)
        assert r.error_estimate >= 0 and r.evaluations > 0

    def test_bad_interval(self):
        with pytest.raises(DomainError):
            integrate(np.sin, 1.0, 0.0, 1e-10)

    def test_complex_integrand(self):
        r = integrate(lambda x: np.exp(1j * x), 0, math.pi, 1e-12)
        assert r.value == pytest.approx(2j, abs=1e-11)

    def test_depth_exhaustion_carries_estimate(self):
        f = lambda x: np.cos(1.0 / (x + 1e-12)) / np.sqrt(x + 1e-12)
        with pytest.raises(AccuracyError) as err:
            integrate(f, 0.0, 1.0, 1e-13, max_depth=4)
        assert err.value.value is not None

    @given(st.floats(-2, 2), st.floats(-2, 2))
    @settings(max_examples=40, deadline=None)
    def test_linearity(self, a, b):
        f = lambda x: np.exp(-x) * x
        g = lambda x: np.cos(3 * x)
        tol = 1e-10
        lhs = integrate(lambda x: a * f(x) + b * g(x), 0, 2, tol).value
        rhs = (a * integrate(f, 0, 2, tol).value
               + b * integrate(g, 0, 2, tol).value)
        assert abs(lhs - rhs) <= 2 * tol + 1e-12 * (abs(a) + abs(b))

    def test_refinement_monotonicity(self):
        # peaked rational with a closed form; coarse tolerances first
        f = lambda x: 1.0 / (1.0 + 400.0 * (x - 0.3) ** 2)
        exact = (math.atan(20 * 0.7) + math.atan(20 * 0.3)) / 20.0
        errors = []
        for tol in (1e-3, 5e-4, 2.5e-4, 1.25e-4, 1e-6, 1e-9):
            errors.append(abs(integrate(f, 0, 1, tol).value - exact))
        for coarse, fine in zip(errors, errors[1:]):
            assert fine <= coarse + 5e-15


class TestSemiInfinite:
    def test_exponential_unit(self):
        r = integrate_semi_infinite(lambda y: np.exp(-y), 0, 1e-10,
                                    DecayHint.exponential(1.0))
        assert r.value == pytest.approx(1.0, abs=1e-10)

    def test_exponential_rate_two(self):
        r = integrate_semi_infinite(lambda y: np.exp(-2 * y), 0, 1e-10,
                                    DecayHint.exponential(2.0))
        assert r.value == pytest.approx(0.5, abs=1e-10)

    def test_invariant_function_point(self):
        # J0(2 sqrt(y)) e^{-y} integrates to 1/e
        from wedgewave.specfun import bessel_j0
        r = integrate_semi_infinite(
            lambda y: bessel_j0(2.0 * np.sqrt(y)) * np.exp(-y), 0, 1e-10,
            DecayHint.exponential(1.0))
        assert r.value == pytest.approx(math.exp(-1.0), abs=1e-9)

    def test_compact_hint(self):
        r = integrate_semi_infinite(lambda y: y, 0, 1e-12,
                                    DecayHint.compact(1.0))
        assert r.value == pytest.approx(0.5, abs=1e-12)

    def test_algebraic_hint(self):
        r = integrate_semi_infinite(lambda y: (1.0 + y) ** -3, 0, 1e-9,
                                    DecayHint.algebraic(3.0))
        assert r.value == pytest.approx(0.5, abs=1e-8)

    def test_hint_violation_detected(self):
        # decays far slower than the declared rate
        with pytest.raises(HintError):
            integrate_semi_infinite(lambda y: 1.0 / (1.0 + y) ** 1.5,
                                    0, 1e-10, DecayHint.exponential(5.0))

    def test_hint_parameter_validation(self):
        with pytest.raises(DomainError):
            DecayHint.exponential(-1.0)
        with pytest.raises(DomainError):
            DecayHint.algebraic(1.0)
        with pytest.raises(DomainError):
            DecayHint("compact")


class TestBesselKernel:
    def test_invariant_function(self):
        for x in (1.0, 4.0):
            r = integrate_bessel_kernel(
                lambda y: np.exp(-y), "j0",
                phase_arg=lambda y, x=x: 2.0 * np.sqrt(x * y),
                a=0.0, tol=1e-10, hint=DecayHint.exponential(1.0),
                phase_inverse=lambda w, x=x: w * w / (4.0 * x))
            assert r.value == pytest.approx(math.exp(-x), abs=1e-9)

    def test_zero_function(self):
        r = integrate_bessel_kernel(
            lambda y: np.zeros_like(y), "j0",
            phase_arg=lambda y: 2.0 * np.sqrt(y), a=0.0, tol=1e-10,
            hint=DecayHint.compact(10.0))
        assert r.value == 0.0

    def test_root_finding_path(self):
        # same integral without the analytic inverse
        x = 1.0
        r = integrate_bessel_kernel(
            lambda y: np.exp(-y), "j0",
            phase_arg=lambda y: 2.0 * np.sqrt(x * y),
            a=0.0, tol=1e-10, hint=DecayHint.exponential(1.0))
        assert r.value == pytest.approx(math.exp(-1.0), abs=1e-9)

    @pytest.mark.parametrize("x", [0.5, 1.0, 5.0])
    def test_zero_split_vs_brute_force(self, x):
        f = lambda y: np.exp(-y) * np.cos(3.0 * y)
        split = integrate_bessel_kernel(
            f, "j0", phase_arg=lambda y: 2.0 * np.sqrt(x * y),
            a=0.0, tol=1e-10, hint=DecayHint.exponential(1.0),
            phase_inverse=lambda w: w * w / (4.0 * x))
        brute = brute_bessel_transform(f, x, 50.0)
        assert abs(split.value - brute) < 1e-8

    def test_algebraic_acceleration(self):
        # closed form: int_0^inf J0(2 sqrt(xy)) / (1+y)^2 dy decays slowly
        x = 1.0
        f = lambda y: (1.0 + y) ** -2.5
        r = integrate_bessel_kernel(
            f, "j0", phase_arg=lambda y: 2.0 * np.sqrt(x * y),
            a=0.0, tol=1e-8, hint=DecayHint.algebraic(2.5),
            phase_inverse=lambda w: w * w / (4.0 * x))
        brute = brute_bessel_transform(f, x, 20000.0, n=2000001)
        assert r.value == pytest.approx(brute, abs=1e-6)

    def test_j1_ratio_kernel(self):
        # G-expansion integrand at the exponential fixed point:
        # e^{-x} = k(x/2) - int x J1(w)/w e^{-v} dv, w = sqrt(x(2v-x))
        x = 1.3
        r = integrate_bessel_kernel(
            lambda v: x * np.exp(-v), "j1_over_x",
            phase_arg=lambda v: np.sqrt(np.maximum(x * (2 * v - x), 0.0)),
            a=x / 2, tol=1e-10, hint=DecayHint.exponential(1.0),
            phase_inverse=lambda w: 0.5 * (w * w / x + x))
        assert math.exp(-x / 2) - r.value == pytest.approx(
            math.exp(-x), abs=1e-9)

"""Tests for the deformed-exponential series and lattice power series."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcs import (
    DeformationParams,
    PowerSeries,
    box,
    deformed_derivative,
    eigenfunction_residual,
    log_n_derivative,
    log_n_function,
    n_function,
    n_function_derivative,
    wright_w,
)
from wcs.errors import ConvergenceError, NumericalRangeError, ParameterError

CLASSICAL = DeformationParams(0.0, 1.0, 0.0)
P011 = DeformationParams(0.0, 1.0, 1.0)


class TestNFunction:
    def test_classical_is_exp(self):
        for x in (-5.0, -1.0, 0.3, 1.0, 5.0, 20.0):
            res = n_function(x, CLASSICAL)
            assert res.value.real == pytest.approx(math.exp(x), rel=1e-12)
            assert res.value.imag == 0.0

    def test_at_zero(self):
        for p in (CLASSICAL, P011, DeformationParams(1, 0.5, 0.5)):
            assert n_function(0.0, p).value == 1.0 + 0.0j

    def test_shifted_classical(self):
        # nu=1: sum x^n/(n+1)! = (e^x - 1)/x
        res = n_function(1.0, P011)
        assert res.value.real == pytest.approx(math.e - 1.0, rel=1e-12)

    def test_complex_argument(self):
        res = n_function(1j, CLASSICAL)
        ref = complex(math.cos(1.0), math.sin(1.0))
        assert abs(res.value - ref) <= 1e-12

    def test_result_metadata(self):
        res = n_function(1.0, CLASSICAL)
        assert res.terms_used > 3
        assert res.tail_bound >= 0.0
        assert not res.cancellation
        assert res.real == res.value.real

    def test_cancellation_flag(self):
        assert n_function(-40.0, CLASSICAL).cancellation
        assert not n_function(-1.0, CLASSICAL).cancellation

    def test_overflow_directs_to_log_variant(self):
        with pytest.raises(NumericalRangeError, match="log"):
            n_function(800.0, CLASSICAL)

    def test_max_terms_exhaustion(self):
        with pytest.raises(ConvergenceError):
            n_function(50.0, CLASSICAL, max_terms=10)

    @given(
        st.floats(min_value=-3.0, max_value=3.0),
        st.floats(min_value=-3.0, max_value=3.0),
    )
    @settings(max_examples=100)
    def test_classical_addition_law(self, x, y):
        nx = n_function(x, CLASSICAL).value.real
        ny = n_function(y, CLASSICAL).value.real
        nxy = n_function(x + y, CLASSICAL).value.real
        assert nx * ny == pytest.approx(nxy, rel=1e-9)

    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.4, max_value=1.0),
        st.floats(min_value=0.05, max_value=2.0),
        st.floats(min_value=0.0, max_value=5.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_positive_for_nonnegative_x(self, a, b, dv, x):
        p = DeformationParams(a, b, (a - 1.0) + dv)
        assert n_function(x, p).value.real > 0.0


class TestLogPaths:
    def test_classical_identity(self):
        assert log_n_function(800.0, CLASSICAL) == pytest.approx(800.0, abs=1e-9)

    def test_matches_linear_path(self):
        for p in (CLASSICAL, P011, DeformationParams(0.5, 0.5, 0.25)):
            for x in (0.5, 10.0):
                ref = math.log(n_function(x, p).value.real)
                assert log_n_function(x, p) == pytest.approx(ref, rel=1e-11, abs=1e-11)

    def test_log_derivative_classical(self):
        for r in (1, 2):
            assert log_n_derivative(700.0, r, CLASSICAL) == pytest.approx(
                700.0, abs=1e-8
            )

    def test_negative_x_rejected(self):
        with pytest.raises(ParameterError):
            log_n_function(-1.0, CLASSICAL)


class TestDerivativeSeries:
    def test_classical_derivatives_are_exp(self):
        for r in (1, 2, 3):
            res = n_function_derivative(1.0, r, CLASSICAL)
            assert res.value.real == pytest.approx(math.e, rel=1e-12)

    def test_leading_coefficient_at_zero(self):
        res = n_function_derivative(0.0, 2, CLASSICAL)
        assert res.value.real == pytest.approx(1.0, rel=1e-13)

    def test_against_central_difference(self):
        h = 1e-5
        d = n_function_derivative(2.0, 1, P011).value.real
        fd = (
            n_function(2.0 + h, P011).value.real - n_function(2.0 - h, P011).value.real
        ) / (2.0 * h)
        assert d == pytest.approx(fd, rel=1e-6)

    def test_zeroth_order_is_the_series_itself(self):
        got = n_function_derivative(2.0, 0, CLASSICAL).value
        assert got == pytest.approx(n_function(2.0, CLASSICAL).value, rel=1e-13)

    def test_invalid_order(self):
        with pytest.raises(ParameterError):
            n_function_derivative(1.0, -1, CLASSICAL)


class TestWrightW:
    def test_classical(self):
        assert wright_w(1.0, CLASSICAL).value.real == pytest.approx(math.e, rel=1e-12)

    def test_shifted_classical(self):
        assert wright_w(1.0, P011).value.real == pytest.approx(math.e - 1.0, rel=1e-12)

    def test_at_zero(self):
        p = DeformationParams(1.0, 0.5, 0.5)
        assert wright_w(0.0, p).value.real == pytest.approx(
            1.0 / math.sqrt(math.pi), rel=1e-12
        )

    def test_scaling_relation(self):
        p = DeformationParams(0.5, 0.5, 0.25)
        ref = n_function(2.0, p).value.real * math.exp(-math.lgamma(1.0 - 0.5 + 0.25))
        assert wright_w(2.0, p).value.real == pytest.approx(ref, rel=1e-12)


class TestPowerSeries:
    def test_evaluation_matches_horner(self):
        f = PowerSeries((1.0, 2.0, 0.5), 1.0)
        for x in (0.0, 0.3, 1.7):
            assert f(x) == pytest.approx(1.0 + 2.0 * x + 0.5 * x * x, rel=1e-14)

    def test_fractional_lattice(self):
        f = PowerSeries((0.0, 1.0), 0.5)
        assert f(4.0) == pytest.approx(2.0, rel=1e-14)

    def test_shifted_up_prepends_zero(self):
        f = PowerSeries((1.0, 2.0), 1.0)
        assert f.shifted_up().coeffs == (0.0, 1.0, 2.0)

    def test_derivative_classical_monomial(self):
        d = deformed_derivative(PowerSeries((0.0, 1.0), 1.0), CLASSICAL)
        assert d.coeffs == pytest.approx((1.0,))

    def test_derivative_of_constant_is_empty(self):
        d = deformed_derivative(PowerSeries((5.0,), 1.0), CLASSICAL)
        assert d.coeffs == ()

    def test_derivative_wright_monomial(self):
        p = DeformationParams(1.0, 1.0, 1.0)
        d = deformed_derivative(PowerSeries((0.0, 0.0, 1.0), 1.0), p)
        assert d.coeffs == pytest.approx((0.0, 4.0))

    def test_derivative_weights_are_boxes(self):
        p = DeformationParams(0.5, 0.5, 0.25)
        f = PowerSeries((1.0, 1.0, 1.0, 1.0), 0.5)
        d = deformed_derivative(f, p)
        assert d.coeffs == pytest.approx(tuple(box(k, p) for k in (1, 2, 3)), rel=1e-13)

    def test_beta_mismatch_rejected(self):
        f = PowerSeries((0.0, 1.0), 1.0)
        with pytest.raises(ParameterError):
            deformed_derivative(f, DeformationParams(0.0, 0.5, 0.0))


class TestEigenfunctionResidual:
    def test_classical_exponential(self):
        assert eigenfunction_residual(1.0, 0.5, CLASSICAL) <= 1e-10

    def test_shifted_classical(self):
        assert eigenfunction_residual(2.0, 1.0, P011) <= 1e-8

    def test_wright_lattice(self):
        assert eigenfunction_residual(1.0, 0.25, DeformationParams(1, 0.5, 1)) <= 1e-8

    def test_invalid_arguments(self):
        with pytest.raises(ParameterError):
            eigenfunction_residual(0.0, 1.0, CLASSICAL)
        with pytest.raises(ParameterError):
            eigenfunction_residual(1.0, -1.0, CLASSICAL)

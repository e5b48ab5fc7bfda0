"""Tests for the adaptive Gauss-Kronrod quadrature engine."""

import math

import numpy as np
import pytest
import scipy.special as sp
from numpy.testing import assert_allclose

from wcs.errors import ConvergenceError, NumericalRangeError, ParameterError
from wcs.quadrature import (
    QuadResult,
    integrate_finite,
    integrate_zero_inf,
    integrate_zero_inf_exp,
)


class TestFinite:
    def test_sine_arch(self):
        res = integrate_finite(np.sin, 0.0, math.pi, atol=1e-13, rtol=1e-13)
        assert res.scalar == pytest.approx(2.0, rel=1e-13)

    def test_rational(self):
        res = integrate_finite(lambda x: 1.0 / (1.0 + x * x), -1.0, 1.0, atol=1e-13)
        assert res.scalar == pytest.approx(math.pi / 2.0, rel=1e-12)

    def test_polynomial_is_exact(self):
        res = integrate_finite(lambda x: x ** 5, 0.0, 2.0)
        assert res.scalar == pytest.approx(64.0 / 6.0, rel=1e-14)

    def test_result_metadata(self):
        res = integrate_finite(np.sin, 0.0, math.pi)
        assert isinstance(res, QuadResult)
        assert res.panels >= 1
        assert res.scalar_error >= 0.0

    def test_reversed_interval_rejected(self):
        with pytest.raises(ParameterError):
            integrate_finite(np.sin, 1.0, 0.0)
        with pytest.raises(ParameterError):
            integrate_finite(np.sin, 1.0, 1.0)

    def test_panel_budget_exhaustion(self):
        with pytest.raises(ConvergenceError):
            integrate_finite(
                lambda x: np.sin(40.0 * x), 0.0, 1.0, atol=1e-14, rtol=1e-14,
                max_panels=1,
            )

    def test_nonfinite_integrand_rejected(self):
        with pytest.raises(NumericalRangeError):
            integrate_finite(
                lambda x: np.where(x > 0.5, np.inf, 1.0), 0.0, 1.0
            )


class TestHalfLine:
    def test_unit_exponential(self):
        res = integrate_zero_inf(lambda t: np.exp(-t), atol=1e-13, rtol=1e-12)
        assert res.scalar == pytest.approx(1.0, rel=1e-12)

    def test_gamma_integral(self):
        res = integrate_zero_inf(
            lambda t: t ** 1.5 * np.exp(-t), atol=1e-13, rtol=1e-12
        )
        assert res.scalar == pytest.approx(sp.gamma(2.5), rel=1e-12)

    def test_exp_scheme_matches_rational_scheme(self):
        f = lambda t: np.exp(-t - 1.0 / t) / t
        a = integrate_zero_inf(f, atol=1e-13, rtol=1e-12).scalar
        b = integrate_zero_inf_exp(f, atol=1e-13, rtol=1e-12).scalar
        ref = 2.0 * sp.k0(2.0)
        assert a == pytest.approx(ref, rel=1e-12)
        assert b == pytest.approx(ref, rel=1e-12)
        assert a == pytest.approx(b, rel=1e-12)

    def test_vector_integrand_single_pass(self):
        orders = np.arange(9)
        res = integrate_zero_inf(
            lambda t: t[:, None] ** orders[None, :] * np.exp(-t)[:, None],
            atol=0.0,
            rtol=1e-11,
        )
        assert_allclose(res.value, sp.factorial(orders), rtol=1e-10)
        assert res.value.shape == (9,)
        assert res.error.shape == (9,)

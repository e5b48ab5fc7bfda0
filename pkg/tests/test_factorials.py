"""Tests for the box function, generalized factorials, and asymptotics."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wcs import (
    DeformationParams,
    PhysicalScales,
    box,
    clear_caches,
    gen_double_factorial,
    gen_factorial,
    log_box,
    log_factorial_asymptotic,
    log_gen_double_factorial,
    log_gen_factorial,
)
from wcs.errors import ParameterError

CLASSICAL = DeformationParams(0.0, 1.0, 0.0)

GRID = [
    DeformationParams(a, b, v)
    for a in (0.0, 0.5, 1.0)
    for b in (0.25, 0.5, 1.0)
    for v in (0.1, 0.5, 2.0)
]


class TestParams:
    def test_valid_boundaries(self):
        DeformationParams(0.0, 1.0, 0.0)
        DeformationParams(1.0, 1.0, 0.5)
        DeformationParams(1.0, 0.01, 1e-6)

    @pytest.mark.parametrize(
        "a,b,v",
        [
            (-0.1, 1.0, 0.0),
            (1.1, 1.0, 1.0),
            (0.0, 0.0, 0.0),
            (0.0, 1.2, 0.0),
            (0.0, 1.0, -1.0),
            (1.0, 1.0, 0.0),  # nu must exceed alpha - 1 strictly
            (0.5, 0.5, -0.5),
        ],
    )
    def test_invalid_rejected(self, a, b, v):
        with pytest.raises(ParameterError):
            DeformationParams(a, b, v)

    def test_flags(self):
        assert CLASSICAL.cs_valid
        assert CLASSICAL.complete
        assert not DeformationParams(0.0, 1.0, -0.5).cs_valid
        assert DeformationParams(1.0, 1.0, 2.0).complete  # alpha + beta == 2

    def test_scales_validation(self):
        with pytest.raises(ParameterError):
            PhysicalScales(hbar=0.0)
        with pytest.raises(ParameterError):
            PhysicalScales(mass=-1.0)
        s = PhysicalScales(2.0, 3.0, 0.7)
        assert s.length_sq == pytest.approx(2.0 / (3.0 * 0.7), rel=1e-14)
        assert s.momentum_sq == pytest.approx(2.0 * 3.0 * 0.7, rel=1e-14)


class TestBox:
    def test_zero_is_zero(self):
        for p in GRID:
            assert box(0, p) == 0.0

    def test_classical_is_n(self):
        for n in range(1, 40):
            assert box(n, CLASSICAL) == pytest.approx(float(n), rel=1e-13)

    def test_wright_point(self):
        # Gamma(3)/Gamma(2) * Gamma(3)/Gamma(2) = 2 * 2
        assert box(2, DeformationParams(1.0, 1.0, 1.0)) == pytest.approx(4.0, rel=1e-13)
        assert box(4, DeformationParams(1.0, 1.0, 1.0)) == pytest.approx(16.0, rel=1e-13)

    def test_ml_point(self):
        # alpha=0: [n] telescopes to Gamma(n+1+nu)/Gamma(n+nu)= n + nu
        p = DeformationParams(0.0, 1.0, 2.0)
        for n in range(1, 10):
            assert box(n, p) == pytest.approx(n + 2.0, rel=1e-13)

    def test_positive_on_grid(self):
        for p in GRID:
            for n in range(1, 30):
                assert box(n, p) > 0.0
                assert math.isfinite(log_box(n, p))

    def test_invalid_n(self):
        with pytest.raises(ParameterError):
            box(-1, CLASSICAL)
        with pytest.raises(ParameterError):
            box(1.5, CLASSICAL)


class TestGenFactorial:
    def test_empty_product(self):
        for p in GRID:
            assert gen_factorial(0, p).to_float() == pytest.approx(1.0, rel=1e-14)

    def test_classical_factorials(self):
        for n in range(0, 21):
            got = gen_factorial(n, CLASSICAL).to_float()
            assert got == pytest.approx(float(math.factorial(n)), rel=1e-12)

    def test_frozen_points(self):
        assert gen_factorial(5, CLASSICAL).to_float() == pytest.approx(120.0, rel=1e-12)
        assert gen_factorial(3, DeformationParams(0, 1, 2)).to_float() == pytest.approx(
            60.0, rel=1e-12
        )
        assert gen_factorial(3, DeformationParams(1, 1, 1)).to_float() == pytest.approx(
            36.0, rel=1e-12
        )

    def test_ml_reduction(self):
        # alpha=0: [n]! = Gamma(beta n + 1 + nu) / Gamma(1 + nu)
        for b in (0.3, 0.5, 1.0):
            for v in (0.0, 0.7, 2.0):
                p = DeformationParams(0.0, b, v)
                for n in (1, 5, 17):
                    ref = math.lgamma(b * n + 1 + v) - math.lgamma(1 + v)
                    got = log_gen_factorial(n, p)
                    assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref))

    def test_wright_reduction(self):
        # alpha=1: [n]! = beta^n n! Gamma(beta n + nu) / Gamma(nu)
        for b in (0.4, 1.0):
            for v in (0.5, 1.0, 2.0):
                p = DeformationParams(1.0, b, v)
                for n in (1, 6, 15):
                    ref = (
                        n * math.log(b)
                        + math.lgamma(n + 1)
                        + math.lgamma(b * n + v)
                        - math.lgamma(v)
                    )
                    got = log_gen_factorial(n, p)
                    assert abs(got - ref) <= 1e-10 * max(1.0, abs(ref))

    def test_recurrence(self):
        for p in GRID:
            for n in range(1, 25):
                lhs = log_gen_factorial(n, p)
                rhs = log_box(n, p) + log_gen_factorial(n - 1, p)
                assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))

    @given(
        st.floats(min_value=0.0, max_value=1.0),
        st.floats(min_value=0.1, max_value=1.0),
        st.floats(min_value=0.05, max_value=3.0),
        st.integers(min_value=1, max_value=40),
    )
    @settings(max_examples=150)
    def test_telescoping_product(self, a, b, dv, n):
        p = DeformationParams(a, b, (a - 1.0) + dv)
        direct = log_gen_factorial(n, p)
        product = sum(log_box(i, p) for i in range(1, n + 1))
        assert abs(direct - product) <= 1e-9 * max(1.0, abs(direct))

    def test_invalid_n(self):
        with pytest.raises(ParameterError):
            gen_factorial(-1, CLASSICAL)

    def test_cache_clear_is_transparent(self):
        before = log_gen_factorial(12, GRID[4])
        clear_caches()
        assert log_gen_factorial(12, GRID[4]) == before


class TestDoubleFactorial:
    def test_empty_product(self):
        for p in GRID:
            assert gen_double_factorial(0, p).to_float() == pytest.approx(1.0)

    def test_classical_even(self):
        # (2n)!! = 2 * 4 * 6 ...
        assert gen_double_factorial(6, CLASSICAL).to_float() == pytest.approx(
            48.0, rel=1e-12
        )

    def test_classical_odd(self):
        assert gen_double_factorial(5, CLASSICAL).to_float() == pytest.approx(
            15.0, rel=1e-12
        )

    def test_wright_even_point(self):
        # product of box values [2] * [4] = 4 * 16
        p = DeformationParams(1.0, 1.0, 1.0)
        assert gen_double_factorial(4, p).to_float() == pytest.approx(64.0, rel=1e-12)

    def test_matches_box_product(self):
        for p in GRID[::4]:
            for m in range(1, 14):
                ref = sum(log_box(i, p) for i in range(m, 0, -2))
                assert abs(log_gen_double_factorial(m, p) - ref) <= 1e-10 * max(
                    1.0, abs(ref)
                )


class TestAsymptotic:
    def test_frozen_values(self):
        # (alpha + beta) n (ln(beta n) - 1)
        assert log_factorial_asymptotic(1000, CLASSICAL) == pytest.approx(
            1000.0 * (math.log(1000.0) - 1.0), rel=1e-14
        )
        assert log_factorial_asymptotic(1, CLASSICAL) == pytest.approx(-1.0, rel=1e-14)
        p = DeformationParams(1.0, 0.5, 1.0)
        assert log_factorial_asymptotic(2000, p) == pytest.approx(
            3000.0 * (math.log(1000.0) - 1.0), rel=1e-14
        )

    def test_zero(self):
        assert log_factorial_asymptotic(0, CLASSICAL) == 0.0

    def test_leading_order_ratio(self):
        ratio = log_gen_factorial(10000, CLASSICAL) / log_factorial_asymptotic(
            10000, CLASSICAL
        )
        assert 0.98 <= ratio <= 1.02

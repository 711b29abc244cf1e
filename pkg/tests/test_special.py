"""Gamma function and bisection root finder."""

import math

import pytest
from hypothesis import given, strategies as st

from ordrel.special import bisect_increasing, gamma_fn


class TestGamma:
    def test_integer_factorials(self):
        for n in range(1, 12):
            assert gamma_fn(n) == pytest.approx(math.factorial(n - 1), rel=1e-12)

    def test_half_integer(self):
        assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
        assert gamma_fn(1.5) == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-12)

    def test_against_stdlib(self):
        for x in (0.1, 0.37, 1.23, 2.86, 3.9, 7.5, 11.2, 20.1):
            assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-12)

    def test_reflection_negative(self):
        for x in (-0.5, -1.3, -2.7):
            assert gamma_fn(x) == pytest.approx(math.gamma(x), rel=1e-10)

    @given(st.floats(min_value=0.05, max_value=30.0))
    def test_recurrence(self, x):
        assert gamma_fn(x + 1.0) == pytest.approx(x * gamma_fn(x), rel=1e-10)


class TestBisection:
    def test_linear(self):
        root = bisect_increasing(lambda x: 2.0 * x - 3.0, 0.0, 1.0,
                                 lo_bound=-math.inf, hi_bound=math.inf)
        assert root == pytest.approx(1.5, abs=1e-9)

    def test_cdf_like_target(self):
        cdf = lambda x: 0.0 if x <= 0 else 1.0 - math.exp(-x)
        root = bisect_increasing(cdf, 0.5, 1.0, lo_bound=0.0, hi_bound=math.inf)
        assert root == pytest.approx(math.log(2.0), abs=1e-8)

    def test_respects_bounds(self):
        cdf = lambda x: 0.0 if x <= 1.0 else 1.0 - x ** -2.0
        root = bisect_increasing(cdf, 0.75, 1.0, lo_bound=1.0, hi_bound=math.inf)
        assert root == pytest.approx(2.0, abs=1e-8)

    @given(st.floats(min_value=0.01, max_value=0.99),
           st.floats(min_value=0.2, max_value=5.0))
    def test_exponential_quantile_roundtrip(self, u, rate):
        cdf = lambda x: -math.expm1(-rate * x) if x > 0 else 0.0
        root = bisect_increasing(cdf, u, 0.5, lo_bound=0.0, hi_bound=math.inf)
        assert cdf(root) == pytest.approx(u, abs=1e-8)

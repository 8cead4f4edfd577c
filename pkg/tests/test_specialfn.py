"""Gamma, Pochhammer, Kummer and Laguerre polynomials, and the identities
connecting them, checked against independent closed forms and jets."""

import math
import time

import numpy as np
import pytest

from swanson.errors import PoleAtNonPositiveInteger, PoleConfiguration
from swanson.jets import Jet
from swanson.specialfn import (gamma_fn, gauss2f1_unit, kummer, laguerre,
                               pochhammer)


class TestGamma:
    def test_gamma_one(self):
        assert gamma_fn(1.0) == 1.0

    def test_gamma_half_is_sqrt_pi(self):
        assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_gamma_two_point_five(self):
        # 1.5 * 0.5 * sqrt(pi)
        assert gamma_fn(2.5) == pytest.approx(1.5 * 0.5 * math.sqrt(math.pi),
                                              rel=1e-13)
        assert gamma_fn(2.5) == pytest.approx(1.3293403882, rel=1e-9)

    @pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
    def test_pole_rejection(self, x):
        with pytest.raises(PoleAtNonPositiveInteger):
            gamma_fn(x)

    def test_recurrence_on_positive_axis(self):
        for x in np.linspace(0.3, 49.0, 40):
            assert gamma_fn(x + 1) == pytest.approx(x * gamma_fn(x), rel=1e-13)


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(3.7, 0) == 1.0
        assert pochhammer(-12.0, 0) == 1.0

    def test_small_rising_product(self):
        assert pochhammer(2.5, 2) == pytest.approx(8.75, rel=1e-15)

    def test_truncation_at_negative_integers(self):
        # (-k)_n = (-1)^n k!/(k-n)! for n <= k, and 0 beyond
        assert pochhammer(-3.0, 5) == 0.0
        for k in range(1, 7):
            for n in range(0, k + 1):
                expected = (-1) ** n * math.factorial(k) / math.factorial(k - n)
                assert pochhammer(float(-k), n) == pytest.approx(expected)
            assert pochhammer(float(-k), k + 1) == 0.0

    def test_gamma_quotient_agreement(self):
        for s in (0.4, 1.3, 2.5, 7.1):
            for n in (1, 3, 6):
                quotient = gamma_fn(s + n) / gamma_fn(s)
                assert pochhammer(s, n) == pytest.approx(quotient, rel=1e-12)


class TestKummer:
    def test_degree_zero_is_one(self):
        assert kummer(0, 2.5, 17.3) == 1.0

    def test_degree_one_root(self):
        assert kummer(1, 2.5, 2.5) == pytest.approx(0.0, abs=1e-15)

    def test_degree_two_frozen_value(self):
        expected = 1 - 2 / 2.5 + (2 * 1) / (2.5 * 3.5 * 2) * 1
        assert kummer(2, 2.5, 1.0) == pytest.approx(expected, rel=1e-14)
        assert expected == pytest.approx(0.3142857142857143, rel=1e-12)

    def test_value_at_origin(self):
        for n in range(8):
            assert kummer(n, 1.7, 0.0) == 1.0

    def test_polynomial_degree(self):
        # leading coefficient of the degree-n polynomial is nonzero
        n, g = 4, 2.2
        ys = np.linspace(0.0, 4.0, n + 2)
        vals = [kummer(n, g, float(y)) for y in ys]
        lead = np.polyfit(ys, vals, n)[0]
        assert abs(lead) > 1e-6
        # and a fit of degree n reproduces the samples (it is a polynomial)
        fitted = np.polyval(np.polyfit(ys, vals, n), ys)
        assert np.allclose(fitted, vals, rtol=1e-9, atol=1e-12)

    def test_accepts_jets(self):
        y = Jet.variable(1.3, 2)
        j = kummer(3, 2.5, y)
        h = 1e-6
        approx = (kummer(3, 2.5, 1.3 + h) - kummer(3, 2.5, 1.3 - h)) / (2 * h)
        assert j.derivative(1) == pytest.approx(approx, rel=1e-8)


class TestLaguerre:
    def test_degree_zero_and_one(self):
        assert laguerre(0, 0.7, 5.0) == 1.0
        assert laguerre(1, 0.7, 5.0) == pytest.approx(0.7 + 1 - 5.0, rel=1e-15)

    def test_cross_check_with_kummer(self):
        n, beta, t = 3, 1.5, 2.0
        expected = pochhammer(beta + 1, n) / math.factorial(n) * kummer(n, beta + 1, t)
        assert laguerre(n, beta, t) == pytest.approx(expected, rel=1e-13)


SEEDED_CASES = []
_rng = np.random.default_rng(20260826)
for _ in range(1000):
    SEEDED_CASES.append((int(_rng.integers(0, 13)),
                         float(_rng.uniform(-0.9, 8.0)),
                         float(_rng.uniform(0.0, 20.0))))


class TestPropertySuites:
    def test_kummer_laguerre_identity_randomized(self):
        for n, beta, t in SEEDED_CASES:
            lhs = laguerre(n, beta, t)
            pref = pochhammer(beta + 1, n) / math.factorial(n)
            rhs = pref * kummer(n, beta + 1, t)
            # scale by the summation condition (sum of term magnitudes):
            # the alternating series cancels heavily at large t
            cond = sum(abs(pref * pochhammer(-n, k) * t**k
                           / (pochhammer(beta + 1, k) * math.factorial(k)))
                       for k in range(n + 1))
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, cond)

    def test_derivative_lowers_degree_and_raises_parameter(self):
        # d/dt L_n^beta(t) = -L_{n-1}^{beta+1}(t), via jet differentiation
        for n, beta, t in SEEDED_CASES[:300]:
            if n == 0:
                continue
            tj = Jet.variable(t, 1)
            lhs = laguerre(n, beta, tj).derivative(1)
            rhs = -laguerre(n - 1, beta + 1, t)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))

    def test_parameter_recurrence(self):
        # L_n^beta = L_{n-1}^beta + L_n^(beta-1)
        for n, beta, t in SEEDED_CASES[:300]:
            if n == 0:
                continue
            lhs = laguerre(n, beta, t)
            rhs = laguerre(n - 1, beta, t) + laguerre(n, beta - 1, t)
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))

    def test_thousand_cases_run_fast(self):
        start = time.perf_counter()
        for n, beta, t in SEEDED_CASES:
            laguerre(n, beta, t)
        assert time.perf_counter() - start < 1.0


class TestGaussUnitArgument:
    def test_a_zero_gives_one(self):
        assert gauss2f1_unit(0.0, 1.3, 2.7) == 1.0

    def test_negative_integer_frozen_value(self):
        assert gauss2f1_unit(-1.0, 1.0, 2.0) == pytest.approx(0.5, rel=1e-13)

    def test_terminating_series_cross_check(self):
        # a = -2 terminates; sum the series directly
        a, b, c = -2.0, 3.5, 2.5
        series = sum(pochhammer(a, k) * pochhammer(b, k)
                     / (pochhammer(c, k) * math.factorial(k))
                     for k in range(3))
        assert gauss2f1_unit(a, b, c) == pytest.approx(series, rel=1e-12)

    def test_pole_configuration_rejected(self):
        with pytest.raises(PoleConfiguration):
            gauss2f1_unit(1.0, 1.0, 2.0)  # c - a - b = 0

"""Truncated-Taylor (jet) arithmetic against central finite differences."""

import math

import pytest

from swanson.jets import Jet


def fd_derivative(f, x, k, h=1e-5):
    """Central finite difference of order k with one Richardson refinement."""
    def d1(g, x, h):
        return (g(x + h) - g(x - h)) / (2 * h)

    if k == 1:
        coarse = d1(f, x, 2 * h)
        fine = d1(f, x, h)
        return (4 * fine - coarse) / 3
    if k == 2:
        h = 1e-4  # roundoff in the second difference scales as eps/h^2
        def second(h):
            return (f(x + h) - 2 * f(x) + f(x - h)) / h**2
        return (4 * second(h) - second(2 * h)) / 3
    if k == 3:
        h = 2e-3  # third differences need a wider stencil to stay stable
        def third(h):
            return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h)
                    - f(x - 2 * h)) / (2 * h**3)
        return (4 * third(h) - third(2 * h)) / 3
    raise ValueError(k)


class TestConstruction:
    def test_variable_value_and_slope(self):
        j = Jet.variable(3.0, 4)
        assert j.value == 3.0
        assert j.derivative(1) == 1.0
        assert j.derivative(2) == 0.0

    def test_const_has_no_derivatives(self):
        j = Jet.const(7.5, 3)
        assert j.value == 7.5
        assert all(j.derivative(k) == 0.0 for k in (1, 2, 3))

    def test_derivative_extracts_k_factorial_times_coefficient(self):
        j = Jet((1.0, 2.0, 3.0, 4.0))
        assert j.derivative(2) == 3.0 * 2
        assert j.derivative(3) == 4.0 * 6


class TestArithmeticVsFiniteDifferences:
    POINTS = [0.7, -1.3, 2.1]

    @pytest.mark.parametrize("x", POINTS)
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_product_quotient_chain(self, x, k):
        def f(t):
            return (t**2 + 1) * math.exp(-t / 2) / (t**2 + 3)

        j = ((Jet.variable(x, 4) ** 2 + 1) * (Jet.variable(x, 4) * -0.5).exp()
             / (Jet.variable(x, 4) ** 2 + 3))
        approx = fd_derivative(f, x, k)
        assert j.derivative(k) == pytest.approx(approx, rel=1e-7, abs=1e-7)

    @pytest.mark.parametrize("x", [0.5, 1.7])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_real_power_and_log(self, x, k):
        def f(t):
            return t**2.5 * math.log(t + 2)

        xj = Jet.variable(x, 4)
        j = xj.power(2.5) * (xj + 2).log()
        approx = fd_derivative(f, x, k)
        assert j.derivative(k) == pytest.approx(approx, rel=1e-7, abs=1e-7)

    def test_sqrt_matches_half_power(self):
        xj = Jet.variable(2.3, 4)
        a = (xj**2 + 1).sqrt()
        b = (xj**2 + 1).power(0.5)
        for kk in range(5):
            assert a.coeffs[kk] == pytest.approx(b.coeffs[kk], rel=1e-14)


class TestAlgebraicExactness:
    def test_division_inverts_multiplication(self):
        a = Jet((2.0, -1.0, 0.5, 0.25))
        b = Jet((3.0, 0.7, -0.2, 0.1))
        c = (a * b) / b
        for k in range(4):
            assert c.coeffs[k] == pytest.approx(a.coeffs[k], rel=1e-14)

    def test_exp_log_round_trip(self):
        a = Jet((1.5, 0.3, -0.2, 0.05))
        b = a.exp().log()
        for k in range(4):
            assert b.coeffs[k] == pytest.approx(a.coeffs[k], rel=1e-13)

    def test_integer_power_matches_repeated_product(self):
        xj = Jet.variable(1.3, 4)
        base = xj**2 + 0.5
        assert (base**3).coeffs == pytest.approx((base * base * base).coeffs)

    def test_shift_is_the_jet_of_the_derivative(self):
        # f = x^4: jet of f'' at x has value 12 x^2
        x = 1.7
        j = Jet.variable(x, 4) ** 4
        d2 = j.shift(2)
        assert d2.value == pytest.approx(12 * x**2, rel=1e-14)
        assert d2.derivative(1) == pytest.approx(24 * x, rel=1e-14)

    def test_scalar_mixing(self):
        j = 2.0 * Jet.variable(1.0, 2) + 1.0
        assert j.value == 3.0
        assert j.derivative(1) == 2.0

    def test_power_rejects_nonpositive_base(self):
        from swanson.errors import DomainError
        with pytest.raises(DomainError):
            Jet.variable(-1.0, 2).power(0.5)

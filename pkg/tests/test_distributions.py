import math

import numpy as np
import pytest
from scipy import integrate, special

from stable_hitting.errors import DomainError
from stable_hitting.distributions import (alpha_cauchy_charfn,
                                          alpha_cauchy_density,
                                          alpha_rayleigh_survival,
                                          beta_prime_density, linnik_density,
                                          meixner_density,
                                          relation_r_constant, z_density,
                                          z_levy_exponent)
from stable_hitting.numerics import integrate_adaptive, integrate_oscillatory_cos


class TestBetaPrime:
    def test_unit_shapes(self):
        assert beta_prime_density(1, 1, 1.0) == pytest.approx(0.25, abs=1e-14)

    def test_half_shapes(self):
        # B(1/2, 1/2) = pi
        assert beta_prime_density(0.5, 0.5, 1.0) == pytest.approx(1 / (2 * math.pi), abs=1e-12)

    @pytest.mark.parametrize("a,b", [(0.5, 0.5), (2.0, 3.0)])
    def test_normalization(self, a, b):
        val = integrate_adaptive(lambda x: beta_prime_density(a, b, x), 0, math.inf)
        assert val == pytest.approx(1.0, abs=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta_prime_density(-1, 1, 1.0)
        with pytest.raises(DomainError):
            beta_prime_density(1, 1, -0.5)


class TestAlphaCauchy:
    def test_standard_cauchy(self):
        assert alpha_cauchy_density(2.0, 0.0) == pytest.approx(1 / math.pi, abs=1e-14)
        assert alpha_cauchy_density(2.0, 1.0) == pytest.approx(1 / (2 * math.pi), abs=1e-14)

    @pytest.mark.parametrize("alpha", [1.5, 3.0])
    def test_normalization(self, alpha):
        val = 2 * integrate_adaptive(lambda x: alpha_cauchy_density(alpha, x), 0, math.inf)
        assert val == pytest.approx(1.0, abs=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            alpha_cauchy_density(1.0, 0.0)


class TestLinnik:
    def test_alpha_two_is_bilateral_exponential(self):
        for x in (0.0, 0.5, 2.0):
            assert linnik_density(2.0, x) == pytest.approx(0.5 * math.exp(-abs(x)), abs=1e-9)

    def test_at_zero_two_routes(self):
        # (1/pi) int dtheta/(1+theta^1.5) == (1/(1.5 pi)) B(2/3, 1/3)
        # via the substitution u = theta^1.5
        want = special.beta(2 / 3, 1 / 3) / (1.5 * math.pi)
        assert linnik_density(1.5, 0.0) == pytest.approx(want, abs=1e-10)

    def test_normalization(self):
        val = 2 * integrate_adaptive(lambda x: linnik_density(1.5, x), 0, math.inf)
        assert val == pytest.approx(1.0, abs=1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            linnik_density(2.5, 0.0)


class TestRelationR:
    def test_charfn_at_zero(self):
        for alpha in (1.25, 1.5, 1.8):
            assert alpha_cauchy_charfn(alpha, 0.0) == pytest.approx(1.0, abs=1e-9)

    def test_charfn_even(self):
        assert alpha_cauchy_charfn(1.5, 1.0) == alpha_cauchy_charfn(1.5, -1.0)

    @pytest.mark.parametrize("alpha", [1.25, 1.5, 1.8])
    @pytest.mark.parametrize("theta", [0.25, 0.5, 1.0, 2.0, 4.0])
    def test_proportionality(self, alpha, theta):
        lhs = alpha_cauchy_charfn(alpha, theta)
        rhs = relation_r_constant(alpha) * linnik_density(alpha, theta)
        assert abs(lhs - rhs) <= 1e-6

    def test_constant_normalizes_linnik_at_zero(self):
        # L_a(0) = 1/(a sin(pi/a)), so const * L_a(0) must be exactly 1
        for alpha in (1.25, 1.5, 1.8):
            assert relation_r_constant(alpha) * linnik_density(alpha, 0.0) == pytest.approx(1.0, abs=1e-9)


class TestZDensity:
    def test_half_shape_at_zero(self):
        assert z_density(0.5, 0.0) == pytest.approx(0.5, abs=1e-12)

    def test_half_shape_is_sech(self):
        # z_{1/2}(x) = 1 / (2 cosh(pi x / 2))
        for x in (0.3, 1.0, 4.0):
            assert z_density(0.5, x) == pytest.approx(1 / (2 * math.cosh(math.pi * x / 2)), rel=1e-12)

    def test_symmetry(self):
        assert z_density(1.3, 0.7) == pytest.approx(z_density(1.3, -0.7), rel=1e-13)

    @pytest.mark.parametrize("theta", [0.5, 1.0, 2.0])
    def test_charfn_is_sech(self, theta):
        val = 2 * integrate_oscillatory_cos(lambda x: z_density(0.5, x), theta)
        assert val == pytest.approx(1 / math.cosh(theta), abs=1e-6)

    def test_no_overflow_far_out(self):
        assert 0.0 <= z_density(0.5, 80.0) < 1e-50
        assert 0.0 <= z_density(3.0, -60.0) < 1e-50

    @pytest.mark.parametrize("a", [0.5, 2.0])
    def test_normalization(self, a):
        val = 2 * integrate_adaptive(lambda x: z_density(a, x), 0, math.inf)
        assert val == pytest.approx(1.0, abs=1e-8)


class TestZLevyExponent:
    def test_zero(self):
        assert z_levy_exponent(0.7, 0.0) == 0.0

    def test_even(self):
        assert z_levy_exponent(0.7, 1.3) == z_levy_exponent(0.7, -1.3)

    def test_half_shape_is_log_cosh(self):
        # e^{-Phi_{1/2}} is the char-fn of z_{1/2}, i.e. sech
        for th in (0.5, 1.0, 3.0):
            assert z_levy_exponent(0.5, th) == pytest.approx(math.log(math.cosh(th)), abs=1e-9)

    @pytest.mark.parametrize("a", [0.5, 1.0, 1.7])
    @pytest.mark.parametrize("theta", [0.5, 2.0, 10.0, 60.0])
    def test_loggamma_identity(self, a, theta):
        # Phi_a(th) = 2 log Gamma(a) - 2 Re log Gamma(a + i th / pi)
        want = 2 * special.loggamma(a).real - 2 * special.loggamma(a + 1j * theta / math.pi).real
        assert z_levy_exponent(a, theta) == pytest.approx(want, abs=1e-8)


class TestMeixner:
    def test_normalization_symmetric(self):
        val = integrate.quad(lambda x: meixner_density(0.0, 1.0, x), -25, 25, limit=200)[0]
        assert val == pytest.approx(1.0, abs=1e-6)

    def test_equals_scaled_z_half(self):
        # M_0(1) has the law of half a hyperbolic-cosine variable
        for x in (0.0, 0.4, 1.5):
            assert meixner_density(0.0, 1.0, x) == pytest.approx(2 * z_density(0.5, 2 * x), abs=1e-8)

    def test_positive_mean_shift(self):
        mean = integrate.quad(lambda x: x * meixner_density(0.5, 1.0, x), -25, 25, limit=200)[0]
        assert mean > 0.01

    def test_asymmetric_normalization(self):
        val = integrate.quad(lambda x: meixner_density(0.5, 1.0, x), -30, 30, limit=200)[0]
        assert val == pytest.approx(1.0, abs=1e-6)

    def test_domain(self):
        with pytest.raises(DomainError):
            meixner_density(3.5, 1.0, 0.0)
        with pytest.raises(DomainError):
            meixner_density(0.0, -1.0, 0.0)


class TestAlphaRayleighSurvival:
    def test_at_zero(self):
        for alpha in (1.2, 1.7, 2.0):
            assert alpha_rayleigh_survival(alpha, 0.0) == 1.0

    def test_gaussian_case(self):
        # R_2 = 2 sqrt(e), survival e^{-x^2/4}
        for x in (0.5, 1.0, 3.0):
            assert alpha_rayleigh_survival(2.0, x) == pytest.approx(math.exp(-x * x / 4), abs=1e-10)

    def test_nonincreasing(self):
        grid = np.linspace(0.0, 8.0, 30)
        vals = [alpha_rayleigh_survival(1.5, float(x)) for x in grid]
        assert all(b <= a + 1e-12 for a, b in zip(vals, vals[1:]))
        assert all(0.0 <= v <= 1.0 for v in vals)

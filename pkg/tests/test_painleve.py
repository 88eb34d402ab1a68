"""
Unit tests for the Hastings-McLeod solution and the Tracy-Widom
distributions built on it.
"""

import numpy as np
import pytest
from pytest import approx
from scipy.special import airy

from matchstat.common import ValidationError, RangeError
from matchstat.painleve import (
    GOE,
    GUE,
    HastingsMcLeod,
    left_boundary,
    tw_distribution,
    tw_cdf,
    g1g2h,
    g_integral_check,
    goe_identity_residual,
    gue_identity_residual,
    goe_correction_e,
    perfect_derivative_check,
    alpha_prime_residual,
    collocation_residuals,
)


class TestHastingsMcLeod:
    def test_airy_decay(self, hm_solution):
        assert float(hm_solution.q_at(6.0)) == approx(airy(6.0)[0], rel=1e-3)

    def test_left_asymptote(self, hm_solution):
        assert float(hm_solution.q_at(-10.0)) == approx(np.sqrt(5.0), abs=1e-2)
        assert left_boundary(-10.0) == approx(np.sqrt(5.0), abs=1e-3)

    def test_invariants(self, hm_solution):
        inv = hm_solution.invariants()
        assert inv['q_min'] > 0
        assert inv['u_max'] <= 0
        assert inv['identity_q4'] < 1e-8
        assert inv['boundary_right'] < 1e-8
        assert hm_solution.passed()

    def test_collocation(self, hm_solution):
        residuals = collocation_residuals(hm_solution)
        assert residuals['u_prime'] < 1e-4
        assert residuals['u_second'] < 1e-3

    def test_alpha_prime(self, hm_solution):
        assert alpha_prime_residual(hm_solution, np.linspace(-5, 5, 11)) < 1e-5

    def test_out_of_range(self, hm_solution):
        with pytest.raises(RangeError):
            hm_solution.q_at(hm_solution.s_max + 1)

    def test_grid_guards(self):
        with pytest.raises(ValidationError):
            HastingsMcLeod(s_min=-3.0)
        with pytest.raises(ValidationError):
            HastingsMcLeod(npoints=100)


class TestTracyWidom:
    def test_goe_moments(self, hm_solution):
        tw = tw_distribution(GOE, hm_solution)
        assert tw.mean() == approx(-1.2065335745820, abs=1e-6)
        assert tw.variance() == approx(1.6077810345, abs=1e-6)

    def test_gue_moments(self, hm_solution):
        tw = tw_distribution(GUE, hm_solution)
        assert tw.mean() == approx(-1.7710868074, abs=1e-6)
        assert tw.variance() == approx(0.8131947928, abs=1e-6)

    @pytest.mark.parametrize('which', [GOE, GUE])
    def test_density_is_derivative(self, hm_solution, which):
        tw = tw_distribution(which, hm_solution)
        h = 1e-4
        for x in (-3.0, -1.0, 0.5, 2.0):
            slope = (tw.cdf(x + h) - tw.cdf(x - h)) / (2 * h)
            assert float(tw.pdf(x)) == approx(float(slope), rel=1e-6, abs=1e-10)
            curve = (tw.pdf(x + h) - tw.pdf(x - h)) / (2 * h)
            assert float(tw.pdf_prime(x)) == approx(float(curve), rel=1e-5, abs=1e-7)

    @pytest.mark.parametrize('which', [GOE, GUE])
    def test_cdf_shape(self, hm_solution, which):
        tw = tw_distribution(which, hm_solution)
        xs = np.linspace(-8, 6, 141)
        values = tw.cdf(xs)
        assert np.all(np.diff(values) >= -1e-12)
        assert values[0] < 1e-10
        assert values[-1] > 1 - 1e-4

    def test_derivative_orders(self, hm_solution):
        tw = tw_distribution(GUE, hm_solution)
        assert tw.derivative(-1.0, 0) == tw.cdf(-1.0)
        assert tw.derivative(-1.0, 1) == tw.pdf(-1.0)
        assert tw.derivative(-1.0, 2) == tw.pdf_prime(-1.0)
        with pytest.raises(ValidationError):
            tw.derivative(-1.0, 3)

    def test_quantile(self, hm_solution):
        tw = tw_distribution(GOE, hm_solution)
        p = float(tw.cdf(-1.0))
        assert tw.ppf(p) == approx(-1.0, abs=1e-8)
        with pytest.raises(ValidationError):
            tw.ppf(1.0)

    def test_range(self, hm_solution):
        tw = tw_distribution(GUE, hm_solution)
        with pytest.raises(RangeError):
            tw.cdf(tw.x_max + 0.5)
        with pytest.raises(RangeError):
            tw_cdf(GOE, -50.0, hm_solution)

    def test_unknown_family(self, hm_solution):
        with pytest.raises(ValidationError):
            tw_distribution('gse', hm_solution)


class TestCorrections:
    def test_g_symmetric_on_diagonal(self, hm_solution):
        ys = np.linspace(-4, 4, 9)
        g1, g2, _ = g1g2h(hm_solution, ys, ys)
        assert np.allclose(g1, g2, rtol=0, atol=1e-14)

    def test_g_integral(self, hm_solution):
        check = g_integral_check(hm_solution, x=-1.0, x_prime=0.5)
        assert check['residual'] < 1e-6

    def test_goe_identity(self, hm_solution):
        xs = np.linspace(-6, 4, 41)
        assert goe_identity_residual(hm_solution, xs) < 1e-10

    def test_gue_identity(self, hm_solution):
        xs = np.linspace(-6, 4, 41)
        assert gue_identity_residual(hm_solution, xs) < 1e-10

    def test_goe_correction_vanishes_right(self, hm_solution):
        assert abs(float(goe_correction_e(hm_solution, 8.0))) < 1e-6

    def test_perfect_derivatives(self, hm_solution):
        residuals = perfect_derivative_check(hm_solution, x_t=0.3, etas=np.linspace(-4, 4, 17))
        assert residuals['u1_residual'] < 1e-4
        assert residuals['u2_residual'] < 1e-3

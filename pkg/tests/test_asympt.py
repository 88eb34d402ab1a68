"""
Unit tests for the scaling maps, decay fits, the finite-t correction
formulas and the Poissonized covariance.
"""

import math

import pytest
from pytest import approx

from matchstat.common import ValidationError, DomainError, DegenerateFitError
from matchstat.opflow import nes_marginal_cdf
from matchstat.painleve import tw_distribution, GOE
from matchstat.asympt import (
    a_of_gamma,
    a_series,
    a_closed,
    s_of_gamma,
    s_expansion_residual,
    nes_level,
    lt_level,
    ScalingPoint,
    ResidualSeries,
    fit_decay,
    fit_line,
    thm13_approx,
    thm11_correction,
    prop63_check,
    exponential_regime_value,
    covariance_poissonized,
    covariance_poisson_route,
    Verifier,
    VerifyReport,
    tgrid_from_text,
    CHECKS,
)


def _series(name, ts, power, scale=1.0) -> ResidualSeries:
    series = ResidualSeries(name=name)
    for t in ts:
        series.append(t=t, residual=scale * t ** power)
    return series


class TestScalingMap:
    def test_fixed_point(self):
        assert a_of_gamma(1.0) == 0

    @pytest.mark.parametrize('gamma', [0.9, 1.1])
    def test_near_one(self, gamma):
        assert a_of_gamma(gamma) == approx(a_series(gamma), abs=5e-4)

    def test_sign(self):
        assert a_of_gamma(0.5) < 0 < a_of_gamma(1.4)

    def test_series_switch_is_continuous(self):
        gamma = 1 + 2e-4
        assert a_closed(gamma) == approx(a_series(gamma), abs=1e-7)

    @pytest.mark.parametrize('gamma', [0.0, -0.5, 1.5, 2.0])
    def test_domain(self, gamma):
        with pytest.raises(DomainError):
            a_of_gamma(gamma)

    def test_s_scales_with_t(self):
        assert s_of_gamma(1000.0, 1.1) == approx(100 * a_of_gamma(1.1))

    def test_expansion_improves_near_one(self):
        t = 500.0
        assert s_expansion_residual(t, 1.001) < s_expansion_residual(t, 1.05)


class TestScalingPoint:
    def test_levels(self):
        point = ScalingPoint(t=1000, x=0)
        assert point.j == 1000
        assert point.l == 2000
        assert point.x_t == approx(0.1)
        assert point.x_upper_t == approx(0.0)
        assert point.gamma == approx(2001 / 2000)
        assert point.k is None and point.m is None

    def test_pair(self):
        point = ScalingPoint(t=1000, x=0, x_prime=1)
        assert point.k == 1005
        assert point.m == 2006
        assert point.gamma_tilde == approx(2011 / 2000)
        assert point.s_tilde > point.s
        info = point.to_dict()
        assert info['k'] == 1005 and info['j'] == 1000

    def test_level_helpers(self):
        assert nes_level(8.0, 2.0) == 10
        assert lt_level(8.0, -1.0) == 14

    @pytest.mark.parametrize('t,j,k', [(20.0, 18, 23), (64.0, 60, 70), (7.5, 3, None)])
    def test_from_levels(self, t, j, k):
        point = ScalingPoint.from_levels(t=t, j=j, k=k)
        assert point.j == j
        assert point.k == k

    def test_positive_time(self):
        with pytest.raises(ValidationError):
            ScalingPoint(t=0, x=1)


class TestDecayFit:
    def test_inverse_t(self):
        series = _series('inverse', (20, 40, 80, 160), -1.0, scale=3.0)
        assert fit_decay(series) == approx(-1.0)
        assert series.intercept == approx(math.log(3.0))

    def test_two_thirds(self):
        series = _series('two thirds', (10, 20, 40, 80), -2.0 / 3)
        assert fit_decay(series) == approx(-2.0 / 3)

    def test_report(self):
        series = _series('inverse', (20, 40, 80, 160), -1.0)
        info = series.to_dict()
        assert info['fitted_slope'] == approx(-1.0)
        assert len(info['points']) == 4

    def test_short_report_has_no_fit(self):
        info = _series('short', (20, 40, 80), -1.0).to_dict()
        assert 'fitted_slope' not in info

    def test_too_few_points(self):
        with pytest.raises(ValidationError):
            fit_line(_series('short', (20, 40, 80), -1.0))

    def test_zero_residual(self):
        series = _series('zero', (20, 40, 80), -1.0)
        series.append(t=160, residual=0.0)
        with pytest.raises(DegenerateFitError):
            fit_decay(series)

    def test_refit_after_append(self):
        series = _series('grow', (20, 40, 80, 160), -1.0)
        assert series.slope == approx(-1.0)
        series.append(t=320, residual=1.0)
        assert series.slope > -1.0


class TestCorrections:
    def test_correction_decays(self, hm_solution):
        tw = tw_distribution(GOE, hm_solution)
        assert thm11_correction(t=64, x=0, x_prime=0, tw=tw) == approx(
            thm11_correction(t=8, x=0, x_prime=0, tw=tw) / 4)

    def test_approx_is_probability(self, hm_solution):
        tw = tw_distribution(GOE, hm_solution)
        for x in (-3.0, 0.0, 2.0):
            assert 0 <= thm13_approx(t=100, x=x, tw=tw) <= 1

    @pytest.mark.slow
    def test_thm13_residual_shrinks(self, hm_solution):
        tw = tw_distribution(GOE, hm_solution)
        residuals = []
        for t in (20.0, 40.0):
            exact = float(nes_marginal_cdf(t=t, j=ScalingPoint(t=t, x=0).j).value)
            residuals.append(abs(exact - thm13_approx(t=t, x=0, tw=tw)))
        assert residuals[1] < residuals[0] < 0.05

    @pytest.mark.slow
    def test_prop63_small(self, hm_solution):
        assert prop63_check(t=20, n=40, solution=hm_solution) < 0.05

    def test_exponential_regime(self):
        assert exponential_regime_value(t=10, factor=1.5) < 1e-3


class TestCovariance:
    def test_zero_time(self):
        result = covariance_poissonized(t=0)
        assert result.covariance == 0
        assert math.isnan(result.correlation)

    def test_matches_poisson_route(self):
        det = covariance_poissonized(t=0.5)
        poisson = covariance_poisson_route(t=0.5, nmax=6)
        assert det.covariance == approx(poisson.covariance, abs=1e-6)
        assert det.covariance < 0
        assert det.mean == approx(poisson.mean, abs=1e-6)

    def test_report(self):
        info = covariance_poissonized(t=0.5).to_dict()
        assert info['route'] == 'det'
        assert info['tail_bound'] >= 0
        assert len(info['window']) == 2

    def test_range(self):
        with pytest.raises(ValidationError):
            covariance_poissonized(t=-1)
        with pytest.raises(ValidationError):
            covariance_poissonized(t=61)


class TestVerifier:
    def test_tgrid(self):
        assert tgrid_from_text('20,40') == (20.0, 40.0)
        assert tgrid_from_text(' 8, 16 ,32') == (8.0, 16.0, 32.0)

    @pytest.mark.parametrize('text', ['', 'a,b', '10,-5', '0'])
    def test_bad_tgrid(self, text):
        with pytest.raises(ValidationError):
            tgrid_from_text(text)

    def test_unknown_check(self, hm_solution):
        with pytest.raises(ValidationError):
            Verifier(solution=hm_solution).run(check='thm99')

    def test_checks(self):
        assert set(CHECKS) == {'thm11', 'thm13', 'thm15', 'prop62', 'prop63', 'cor12'}

    def test_report_dict(self):
        report = VerifyReport(check='thm13', series=[_series('s', (20, 40, 80, 160), -1.0)], passed=True,
                              params={'x': [0.0]})
        info = report.to_dict()
        assert info['pass'] is True
        assert info['series'][0]['fitted_slope'] == approx(-1.0)

    @pytest.mark.slow
    def test_thm13_run(self, hm_solution):
        report = Verifier(solution=hm_solution).run(check='thm13', x=0.0)
        assert report.passed, report.to_dict()

    @pytest.mark.slow
    def test_prop63_run(self, hm_solution):
        report = Verifier(solution=hm_solution).run(check='prop63')
        assert report.passed, report.to_dict()

"""
Unit tests for the Poissonized distribution functions and the OPUC flow.

Core claims:
    - the determinant route matches Poisson truncation of exact tables
    - the joint law is symmetric and reduces to the marginal for large k
    - the permutation route matches a brute-force count of short permutations
    - integrating the flow reproduces the determinant values
    - the differential identities hold with second-order finite differences
"""

import itertools
import math

import pytest
from pytest import approx

from matchstat.common import ValidationError
from matchstat.combinat import longest_increasing
from matchstat.moments import DISCRETE, CONTINUOUS
from matchstat.opflow import (
    Route,
    joint_cdf,
    nes_marginal_cdf,
    lt_cdf,
    poisson_truncation_cdf,
    prop1_quadrature,
    nes_quadrature,
    lt_quadrature,
    gauss_legendre_nodes,
    ode_identity_checks,
)


# -- Helpers -----------------------------------------------------------------

def _permutation_cdf(t: float, l: int, nmax: int = 7) -> float:
    """ e^{-t^2} sum_n t^{2n} / n!^2 #{sigma in S_n : LIS(sigma) <= l} """
    total = 0.0
    for n in range(nmax + 1):
        count = sum(1 for sigma in itertools.permutations(range(n)) if longest_increasing(sigma) <= l)
        total += t ** (2 * n) / math.factorial(n) ** 2 * count
    return math.exp(-t * t) * total


QUAD = {'prec_bits': 256, 'nodes_per_unit': 32}


# == Determinant route ========================================================

class TestJointCdf:
    def test_zero_time(self):
        point = joint_cdf(t=0, k=3, j=3)
        assert float(point.value) == approx(1.0)

    def test_no_nesting_allowed(self):
        t = 1.3
        point = joint_cdf(t=t, k=2, j=0)
        assert float(point.value) == approx(math.exp(-t * t / 2), rel=1e-14)

    def test_no_crossing_allowed(self):
        point = joint_cdf(t=1.0, k=0, j=2)
        assert float(point.value) == approx(math.exp(-0.5), rel=1e-12)

    @pytest.mark.parametrize('t,k,j', [(0.5, 1, 1), (0.5, 2, 1), (1.0, 2, 2), (1.0, 1, 3)])
    def test_poisson_truncation(self, t, k, j):
        exact = joint_cdf(t=t, k=k, j=j)
        truncated = poisson_truncation_cdf(t=t, k=k, j=j, nmax=8)
        assert abs(float(exact.value - truncated.value)) <= float(truncated.tail) + 1e-12
        assert float(exact.value) == approx(float(truncated.value), abs=1e-8)

    def test_symmetry(self):
        a = joint_cdf(t=1.2, k=2, j=5)
        b = joint_cdf(t=1.2, k=5, j=2)
        assert abs(a.value - b.value) < 1e-25

    def test_large_k_is_marginal(self):
        joint = joint_cdf(t=2.0, k=40, j=3)
        marginal = nes_marginal_cdf(t=2.0, j=3)
        assert abs(joint.value - marginal.value) < 1e-25

    def test_monotone(self):
        values = [float(joint_cdf(t=2.0, k=k, j=3).value) for k in range(6)]
        assert values == sorted(values)
        assert all(0 <= v <= 1 for v in values)

    def test_certificate_and_report(self):
        point = joint_cdf(t=2.0, k=4, j=3)
        assert point.route == Route.DETERMINANT
        assert point.certificate.passed
        info = point.to_dict()
        assert info['route'] == 'det'
        assert info['k'] == 4 and info['j'] == 3
        assert 'value_decimal' in info
        assert 'certificate' in info

    def test_log_value(self):
        point = joint_cdf(t=3.0, k=2, j=2)
        assert float(point.log_value) == approx(math.log(float(point.value)), rel=1e-12)

    def test_negative_time(self):
        with pytest.raises(ValidationError):
            joint_cdf(t=-1, k=1, j=1)

    def test_negative_level(self):
        with pytest.raises(ValidationError):
            joint_cdf(t=1, k=-1, j=2)


class TestMarginals:
    def test_nes_against_tables(self):
        # k = 8 saturates every table with n <= 8
        marginal = nes_marginal_cdf(t=0.5, j=1)
        truncated = poisson_truncation_cdf(t=0.5, k=8, j=1, nmax=8)
        assert float(marginal.value) == approx(float(truncated.value), abs=1e-8)

    def test_lt_zero(self):
        t = 0.8
        assert float(lt_cdf(t=t, l=0).value) == approx(math.exp(-t * t), rel=1e-14)

    @pytest.mark.parametrize('l', [1, 2, 3])
    def test_lt_permutations(self, l):
        t = 0.5
        assert float(lt_cdf(t=t, l=l).value) == approx(_permutation_cdf(t, l), abs=1e-9)

    def test_lt_saturates(self):
        assert float(lt_cdf(t=1.0, l=14).value) > 1 - 1e-9

    def test_lt_route(self):
        point = lt_cdf(t=1.0, l=2)
        assert point.to_dict()['l'] == 2
        assert point.which == 'lt'


# == Flow quadrature ==========================================================

class TestQuadrature:
    def test_nodes(self):
        nodes, weights = gauss_legendre_nodes(t=3.0, panels=3, order=8)
        assert len(nodes) == 24
        assert float(weights.sum()) == approx(3.0)
        assert float((weights * nodes ** 2).sum()) == approx(9.0)

    def test_joint(self):
        exact = joint_cdf(t=2.0, k=4, j=3)
        flow = prop1_quadrature(t=2.0, k=4, j=3, **QUAD)
        assert float(flow) == approx(float(exact.log_value), abs=1e-7)

    def test_joint_without_crossings(self):
        assert float(prop1_quadrature(t=1.5, k=0, j=2)) == approx(-1.125)

    def test_joint_zero_time(self):
        assert prop1_quadrature(t=0, k=1, j=1) == 0

    def test_nes(self):
        exact = nes_marginal_cdf(t=2.0, j=3)
        assert float(nes_quadrature(t=2.0, j=3, **QUAD)) == approx(float(exact.log_value), abs=1e-7)

    def test_lt(self):
        exact = lt_cdf(t=1.5, l=3)
        assert float(lt_quadrature(t=1.5, l=3, **QUAD)) == approx(float(exact.log_value), abs=1e-7)

    def test_lt_zero(self):
        assert float(lt_quadrature(t=1.5, l=0)) == approx(-2.25)

    def test_bad_arguments(self):
        with pytest.raises(ValidationError):
            prop1_quadrature(t=-1.0, k=1, j=1)
        with pytest.raises(ValidationError):
            lt_quadrature(t=1.0, l=-1)


# == Differential identities ==================================================

class TestIdentities:
    def test_continuous(self):
        report = ode_identity_checks(t=1.0, nmax=6, kind=CONTINUOUS)
        assert report.passed, report.to_dict()
        names = [check.name for check in report.checks]
        assert names == ['pi_derivative', 'norm_derivative', 'hankel_derivative',
                         'toeplitz_second_derivative', 'inner_norms']

    def test_discrete(self):
        report = ode_identity_checks(t=1.0, nmax=6, kind=DISCRETE, m=8)
        assert report.passed, report.to_dict()

    def test_step_halving_ratio(self):
        report = ode_identity_checks(t=2.0, nmax=5, kind=CONTINUOUS)
        check = report.check('pi_derivative')
        assert check.ratio == approx(4.0, rel=0.2)

    def test_forward_stencil_near_zero(self):
        report = ode_identity_checks(t=5e-5, nmax=4, kind=CONTINUOUS)
        assert report.check('norm_derivative').residual < 1e-6

    def test_guards(self):
        with pytest.raises(ValidationError):
            ode_identity_checks(t=1.0, nmax=1, kind=CONTINUOUS)
        with pytest.raises(ValidationError):
            ode_identity_checks(t=1.0, nmax=6, kind=DISCRETE, m=3)

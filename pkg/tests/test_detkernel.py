"""
Unit tests for the Toeplitz / Toeplitz-minus-Hankel determinants and the
Levinson recursion for orthogonal polynomials on the unit circle.

Core claims:
    - small determinants agree with their cofactor expansions
    - the certified values carry a passing certificate
    - the discrete Toeplitz-minus-Hankel determinant equals the sine-kernel one
    - N_n = T_{n+1} / T_n and H_j is the product of the even norms
    - the recursion refuses to step past the support of a discrete weight
"""

import mpmath
import pytest
from pytest import approx

from matchstat.common import ValidationError, SingularityError
from matchstat.moments import MomentSequence, DISCRETE, CONTINUOUS, h_continuous
from matchstat.detkernel import (
    toeplitz_det,
    toeplitz_det_certified,
    toeplitz_hankel_det,
    toeplitz_hankel_det_certified,
    sine_kernel_det,
    moments_for,
    levinson_opuc,
    opuc_at,
)
from matchstat.opflow import product_identity_checks


# -- Helpers -----------------------------------------------------------------

def _close(a, b, digits: int = 40) -> bool:
    scale = max(abs(a), abs(b), mpmath.mpf(1))
    return abs(a - b) <= scale * mpmath.mpf(10) ** -digits


# == Determinants =============================================================

class TestToeplitz:
    def test_empty(self):
        h = MomentSequence.continuous(t=1.0, lmax=2)
        assert toeplitz_det(h, 0) == 1

    def test_one(self):
        h = MomentSequence.continuous(t=1.0, lmax=2)
        assert _close(toeplitz_det(h, 1), h[0])

    def test_cofactor_three(self):
        h = MomentSequence.continuous(t=0.9, lmax=6)
        h0, h1, h2 = h[0], h[1], h[2]
        expected = h0 * (h0 * h0 - h1 * h1) - h1 * (h1 * h0 - h1 * h2) + h2 * (h1 * h1 - h0 * h2)
        assert _close(toeplitz_det(h, 3), expected)

    def test_certificate(self):
        h = MomentSequence.continuous(t=3.0, lmax=10)
        value, cert = toeplitz_det_certified(h, 5)
        assert cert.passed
        assert cert.bits >= h.prec_bits
        assert value > 0

    def test_negative_size(self):
        h = MomentSequence.continuous(t=1.0, lmax=2)
        with pytest.raises(ValidationError):
            toeplitz_det(h, -1)


class TestToeplitzHankel:
    def test_one(self):
        h = MomentSequence.continuous(t=1.2, lmax=4)
        assert _close(toeplitz_hankel_det(h, 1), h[0] - h[2])

    def test_cofactor_two(self):
        h = MomentSequence.continuous(t=1.2, lmax=4)
        expected = (h[0] - h[2]) * (h[0] - h[4]) - (h[1] - h[3]) ** 2
        assert _close(toeplitz_hankel_det(h, 2), expected)

    def test_zero_time(self):
        h = MomentSequence.continuous(t=0, lmax=8)
        assert _close(toeplitz_hankel_det(h, 4), mpmath.mpf(1))

    @pytest.mark.parametrize('m,t,j', [(4, 1.5, 3), (6, 0.7, 4), (3, 2.0, 1)])
    def test_sine_kernel(self, m, t, j):
        h = moments_for(kind=DISCRETE, t=t, size=j, prec_bits=256, m=m)
        assert _close(toeplitz_hankel_det(h, j), sine_kernel_det(m=m, t=t, j=j))

    def test_discrete_size_guard(self):
        h = MomentSequence.discrete(m=3, t=1.0)
        with pytest.raises(ValidationError):
            toeplitz_hankel_det(h, 3)

    def test_sine_kernel_size_guard(self):
        with pytest.raises(ValidationError):
            sine_kernel_det(m=3, t=1.0, j=3)

    def test_large_time_certified(self):
        h = moments_for(kind=CONTINUOUS, t=20.0, size=8, prec_bits=256)
        value, cert = toeplitz_hankel_det_certified(h, 8)
        assert cert.passed
        assert value > 0


# == Orthogonal polynomials ===================================================

class TestLevinson:
    def test_first_coefficient(self):
        opuc = opuc_at(kind=CONTINUOUS, t=1.0, nmax=4)
        expected = -h_continuous(1, 1.0) / h_continuous(0, 1.0)
        assert float(opuc.pi(1)) == approx(-0.69777466, abs=1e-8)
        assert _close(opuc.pi(1), expected)
        assert opuc.pi(0) == 1

    def test_norms_are_determinant_ratios(self):
        t, nmax = 1.5, 6
        opuc = opuc_at(kind=CONTINUOUS, t=t, nmax=nmax)
        h = MomentSequence.continuous(t=t, lmax=nmax + 1, prec_bits=opuc.prec_bits)
        for n in range(nmax):
            ratio = toeplitz_det(h, n + 1) / toeplitz_det(h, n)
            assert _close(opuc.norm(n), ratio, digits=30)

    def test_inner_norms(self):
        opuc = opuc_at(kind=DISCRETE, t=1.0, nmax=6, m=5)
        for n in range(7):
            assert _close(opuc.inner_norms[n], opuc.norms[n], digits=30)

    def test_zero_time(self):
        opuc = opuc_at(kind=CONTINUOUS, t=0, nmax=5)
        assert all(opuc.pi(n) == 0 for n in range(1, 6))
        assert all(opuc.norm(n) == 1 for n in range(6))

    def test_coefficients_inside_disk(self):
        opuc = opuc_at(kind=DISCRETE, t=2.0, nmax=7, m=4)
        assert all(abs(value) < 1 for value in opuc.pi0[1:])

    def test_discrete_support(self):
        h = MomentSequence.discrete(m=2, t=1.0)
        levinson_opuc(h, 3)
        with pytest.raises(SingularityError):
            levinson_opuc(h, 4)

    def test_index_range(self):
        opuc = opuc_at(kind=CONTINUOUS, t=1.0, nmax=3)
        with pytest.raises(ValidationError):
            opuc.pi(4)
        with pytest.raises(ValidationError):
            opuc.norm(-1)

    def test_discrete_needs_m(self):
        with pytest.raises(ValidationError):
            opuc_at(kind=DISCRETE, t=1.0, nmax=3)


class TestProducts:
    def test_continuous(self):
        report = product_identity_checks(t=1.0, jmax=3, kind=CONTINUOUS)
        assert report.passed, report.to_dict()

    def test_discrete(self):
        report = product_identity_checks(t=1.5, jmax=3, kind=DISCRETE, m=6)
        assert report.passed, report.to_dict()
        assert report.check('hankel_product').residual < 1e-30

    def test_discrete_guard(self):
        with pytest.raises(ValidationError):
            product_identity_checks(t=1.0, jmax=3, kind=DISCRETE, m=3)

"""
Unit tests for the trigonometric moments of the discrete and continuous
weights.
"""

import mpmath
import pytest
from pytest import approx

from matchstat.common import ValidationError
from matchstat.moments import (
    MomentSequence,
    DISCRETE,
    CONTINUOUS,
    h_discrete,
    h_continuous,
    p_transition,
    aliased_bessel_sum,
)


class TestDiscrete:
    @pytest.mark.parametrize('t', [0.0, 0.3, 1.0, 2.5])
    def test_two_atoms_pair(self, t):
        # m = 2: h_0 = (cosh 2t + 1) / 2
        assert float(h_discrete(0, 2, t)) == approx((mpmath.cosh(2 * t) + 1) / 2, rel=1e-14)

    def test_zero_time(self):
        assert h_discrete(0, 5, 0) == 1
        assert h_discrete(3, 5, 0) == 0
        assert h_discrete(10, 5, 0) == 1

    def test_periodic_and_even(self):
        m, t = 4, 1.3
        assert h_discrete(3, m, t) == h_discrete(3 + 2 * m, m, t)
        assert h_discrete(-3, m, t) == h_discrete(3, m, t)
        assert h_discrete(5, m, t) == h_discrete(3, m, t)

    def test_aliasing(self):
        # m = 1 folds every odd order: sinh 2t
        value = h_discrete(3, 1, 1.0)
        assert abs(value - aliased_bessel_sum(3, 1, 1.0)) < 1e-40
        assert float(value) == approx(float(mpmath.sinh(2)), rel=1e-15)

    @pytest.mark.parametrize('l', [0, 1, 2, 5])
    def test_aliasing_general(self, l):
        m, t = 6, 1.7
        assert abs(h_discrete(l, m, t) - aliased_bessel_sum(l, m, t)) < 1e-40

    def test_many_atoms_approach_bessel(self):
        for l in (0, 1, 4):
            assert abs(h_discrete(l, 200, 1.0) - h_continuous(l, 1.0)) < 1e-60

    def test_bad_m(self):
        with pytest.raises(ValidationError):
            h_discrete(0, 0, 1.0)

    def test_negative_time(self):
        with pytest.raises(ValidationError):
            h_discrete(0, 3, -0.1)


class TestContinuous:
    def test_bessel(self):
        assert float(h_continuous(0, 1.0)) == approx(2.2795853023360673, rel=1e-15)
        assert float(h_continuous(1, 1.0)) == approx(1.5906368546373291, rel=1e-15)

    def test_even(self):
        assert h_continuous(-2, 0.7) == h_continuous(2, 0.7)

    def test_precision(self):
        value = h_continuous(0, 1.0, prec_bits=512)
        with mpmath.workprec(512):
            expected = mpmath.besseli(0, 2)
            assert abs(value - expected) < mpmath.mpf(2) ** -500


class TestTransition:
    def test_normalised(self):
        t = 0.8
        total = mpmath.fsum(p_transition(a, t) for a in range(-60, 61))
        assert float(total) == approx(1.0, abs=1e-30)

    def test_zero_time(self):
        assert p_transition(0, 0) == 1
        assert p_transition(2, 0) == 0

    def test_symmetric(self):
        assert p_transition(-3, 1.1) == p_transition(3, 1.1)


class TestMomentSequence:
    def test_discrete(self):
        h = MomentSequence.discrete(m=3, t=1.0)
        assert h.kind == DISCRETE
        assert h.is_discrete
        assert h[1] == h_discrete(1, 3, 1.0)
        assert h[7] == h[1]
        assert h[-2] == h[2]

    def test_continuous(self):
        h = MomentSequence.continuous(t=1.0, lmax=4)
        assert h.kind == CONTINUOUS
        assert h.lmax == 4
        assert h[-4] == h[4] == h_continuous(4, 1.0)

    def test_continuous_bounds(self):
        h = MomentSequence.continuous(t=1.0, lmax=2)
        with pytest.raises(ValidationError):
            h.h(3)

    def test_cached(self):
        first = MomentSequence.continuous(t=0.5, lmax=3, prec_bits=128)
        second = MomentSequence.continuous(t=0.5, lmax=3, prec_bits=128)
        assert first is second

    def test_create(self):
        h = MomentSequence.create(kind=DISCRETE, t=0.5, lmax=4, m=5)
        assert h.m == 5
        with pytest.raises(ValidationError):
            MomentSequence.create(kind=DISCRETE, t=0.5, lmax=4)
        with pytest.raises(ValidationError):
            MomentSequence.create(kind='other', t=0.5, lmax=4)

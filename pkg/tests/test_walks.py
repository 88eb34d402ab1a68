"""
Unit tests for the walk ensembles and the rejection sampler.

Core claims:
    - a hand-built ensemble is classified as the event definition says
    - the acceptance frequency agrees with the Karlin-McGregor determinant
    - a single free walker returns with probability e^{-2t} I_0(2t)
    - the accepted (K, J) law is reproducible and close to symmetric
"""

import math

import mpmath
import numpy as np
import pytest
from pytest import approx

from matchstat.common import ValidationError, InsufficientAcceptanceError
from matchstat.combinat.sampler import create_generator
from matchstat.walks import (
    WalkEnsemble,
    MCEstimate,
    simulate_event_prob,
    conditional_kj,
    single_walker_return,
    karlin_mcgregor_prob,
    no_move_share,
)


# == Ensembles ================================================================

class TestWalkEnsemble:
    def test_excursion_of_top_walker(self):
        walks = WalkEnsemble(t=1.0, events=[[(0.1, 1), (0.5, -1)], []])
        assert walks.size == 2
        assert walks.in_event()
        assert walks.height() == 1
        assert walks.depth() == 1

    def test_path_rows(self):
        walks = WalkEnsemble(t=1.0, events=[[(0.1, 1), (0.5, -1)], []])
        assert walks.path().tolist() == [[0, -1], [1, -1], [0, -1]]

    def test_wall(self):
        walks = WalkEnsemble(t=1.0, events=[[], [(0.2, -1), (0.3, 1)]])
        assert walks.returns()
        assert not walks.ordered()

    def test_collision(self):
        walks = WalkEnsemble(t=1.0, events=[[(0.1, -1), (0.2, 1)], []])
        assert walks.returns()
        assert not walks.in_event()

    def test_interleaved(self):
        walks = WalkEnsemble(t=1.0, events=[[(0.1, 1), (0.4, -1)], [(0.2, 1), (0.3, -1)]])
        assert walks.in_event()
        assert walks.depth() == 2
        assert walks.height() == 1

    def test_no_return(self):
        walks = WalkEnsemble(t=1.0, events=[[(0.1, 1)], []])
        assert walks.ordered()
        assert not walks.returns()

    def test_quiet(self):
        walks = WalkEnsemble(t=1.0, events=[[], [], []])
        assert walks.in_event()
        assert walks.height() == 0
        assert walks.depth() == 0

    def test_times_must_increase(self):
        with pytest.raises(AssertionError):
            WalkEnsemble(t=1.0, events=[[(0.5, 1), (0.2, -1)]])

    def test_sample(self):
        walks = WalkEnsemble.sample(t=0.5, size=3, rng=create_generator(seed=1))
        assert walks.size == 3
        for walker in walks.events:
            assert all(0 <= time <= 0.5 for time, _ in walker)

    def test_sample_guard(self):
        with pytest.raises(ValidationError):
            WalkEnsemble.sample(t=0.5, size=0, rng=create_generator(seed=1))


# == Estimates ================================================================

class TestMCEstimate:
    def test_from_counts(self):
        estimate = MCEstimate.from_counts(hits=25, total=100, reps=100, accepted=100)
        assert estimate.mean == 0.25
        assert estimate.stderr == approx(math.sqrt(0.25 * 0.75 / 100))
        assert estimate.within(0.3)
        assert not estimate.within(0.5)

    def test_empty(self):
        estimate = MCEstimate.from_counts(hits=0, total=0, reps=10, accepted=0)
        assert math.isnan(estimate.mean)

    def test_exact(self):
        estimate = MCEstimate.from_counts(hits=10, total=10, reps=10, accepted=10)
        assert estimate.stderr == 0
        assert estimate.within(1.0)


# == Determinant oracle =======================================================

class TestKarlinMcGregor:
    def test_zero_time(self):
        assert karlin_mcgregor_prob(t=0, size=3) == 1

    @pytest.mark.parametrize('t', [0.2, 0.7, 1.0])
    def test_single_walker(self, t):
        with mpmath.workprec(128):
            expected = mpmath.exp(-2 * t) * (mpmath.besseli(0, 2 * t) - mpmath.besseli(2, 2 * t))
        assert float(karlin_mcgregor_prob(t=t, size=1)) == approx(float(expected), rel=1e-12)

    def test_decreasing_in_size(self):
        values = [float(karlin_mcgregor_prob(t=0.6, size=n)) for n in range(1, 5)]
        assert values == sorted(values, reverse=True)
        assert all(0 < v < 1 for v in values)

    def test_no_move_share(self):
        share = float(no_move_share(t=0.5, size=2))
        assert 0 < share < 1
        assert float(no_move_share(t=0, size=2)) == approx(1.0)

    def test_guard(self):
        with pytest.raises(ValidationError):
            karlin_mcgregor_prob(t=-0.1, size=2)


# == Rejection sampling =======================================================

class TestSimulation:
    def test_zero_time(self):
        estimate = simulate_event_prob(t=0, size=2, reps=100, seed=1)
        assert estimate.mean == 1
        assert estimate.accepted == 100
        law = conditional_kj(t=0, size=2, reps=200, seed=1)
        assert law.cdf(0, 0).mean == 1
        assert law.counts().tolist() == [[200, 0, 0]]

    @pytest.mark.parametrize('t,size', [(0.4, 1), (0.4, 2), (0.8, 3)])
    def test_event_probability(self, t, size):
        estimate = simulate_event_prob(t=t, size=size, reps=200000, seed=17)
        exact = float(karlin_mcgregor_prob(t=t, size=size))
        assert estimate.within(exact, sigmas=4), (estimate, exact)

    @pytest.mark.slow
    def test_event_probability_large(self):
        estimate = simulate_event_prob(t=0.5, size=4, reps=10 ** 6, seed=3)
        assert estimate.within(float(karlin_mcgregor_prob(t=0.5, size=4)), sigmas=4)

    def test_reproducible(self):
        first = simulate_event_prob(t=0.5, size=2, reps=30000, seed=9)
        second = simulate_event_prob(t=0.5, size=2, reps=30000, seed=9)
        assert first.mean == second.mean

    def test_pool_size_does_not_matter(self):
        from matchstat.utils import WorkerPool
        first = conditional_kj(t=0.5, size=2, reps=50000, seed=4)
        WorkerPool.THREADS = 2
        second = conditional_kj(t=0.5, size=2, reps=50000, seed=4)
        assert np.array_equal(first.counts(), second.counts())

    def test_single_walker(self):
        t = 0.5
        estimate = single_walker_return(t=t, reps=200000, seed=5)
        expected = math.exp(-2 * t) * float(mpmath.besseli(0, 2 * t))
        assert estimate.within(expected, sigmas=4)

    def test_no_move_frequency(self):
        t, size = 0.4, 2
        law = conditional_kj(t=t, size=size, reps=200000, seed=21)
        assert law.frequency(0, 0).within(float(no_move_share(t=t, size=size)), sigmas=4)

    @pytest.mark.parametrize('t,size,reps', [(1.5, 2, 10), (0.5, 0, 10), (0.5, 5, 10), (0.5, 2, 0)])
    def test_guards(self, t, size, reps):
        with pytest.raises(ValidationError):
            simulate_event_prob(t=t, size=size, reps=reps, seed=0)

    def test_insufficient_acceptance(self):
        with pytest.raises(InsufficientAcceptanceError):
            conditional_kj(t=1.0, size=4, reps=150, seed=0)


class TestKJLaw:
    def test_law(self):
        law = conditional_kj(t=0.4, size=3, reps=100000, seed=8)
        assert law.accepted > 100
        assert law.counts().sum() == law.accepted
        assert int(law.depths.max()) <= 3
        assert law.cdf(50, 3).mean == 1

    def test_duality(self):
        law = conditional_kj(t=0.4, size=4, reps=200000, seed=12)
        assert law.duality_pvalue(permutations=999, seed=1) > 0.001

    def test_rows(self):
        law = conditional_kj(t=0.3, size=2, reps=20000, seed=6)
        rows = law.to_rows()
        assert len(rows) == law.counts().size
        for k, j, count, mean, stderr, oracle in rows:
            assert 0 <= mean <= 1
            assert 0 <= oracle <= 1
        assert rows[-1][3] == 1

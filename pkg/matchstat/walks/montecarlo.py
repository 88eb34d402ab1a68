
"""
    Rejection Sampling of Non-Intersecting Walks
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Samples are drawn in fixed-size chunks, each from its own Philox stream
    spawned from the seed, so results do not depend on the pool size.
    Ordering is checked at jump times only; paths are piecewise constant.
"""

import math
from typing import List, Tuple

import numpy as np
import mpmath
from mpmath import mpf

from ..utils import Logging, WorkerPool
from ..common import ValidationError, InsufficientAcceptanceError
from ..common import DEFAULT_BITS
from ..moments import MomentSequence
from ..detkernel import toeplitz_hankel_det
from ..opflow import joint_cdf
from ..combinat.sampler import create_generator


CHUNK_SIZE = 20000
MAX_T = 1.0
MAX_WALKERS = 4
MAX_REPS = 10 ** 8
MIN_ACCEPTED = 100


class MCEstimate:

    def __init__(self, mean: float, stderr: float, reps: int, accepted: int):
        super().__init__()
        assert accepted <= reps, 'accepted %d > reps %d' % (accepted, reps)
        self.mean = mean
        self.stderr = stderr
        self.reps = reps
        self.accepted = accepted

    def within(self, target: float, sigmas: float = 3.0) -> bool:
        if self.stderr == 0:
            return self.mean == target
        return abs(self.mean - target) <= sigmas * self.stderr

    def to_dict(self) -> dict:
        return {'mean': self.mean, 'stderr': self.stderr, 'reps': self.reps, 'accepted': self.accepted}

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s mean=%.6g stderr=%.3g reps=%d accepted=%d />' % (clazz, self.mean, self.stderr, self.reps,
                                                                     self.accepted)

    @classmethod
    def from_counts(cls, hits: int, total: int, reps: int, accepted: int):
        """ Bernoulli frequency hits/total, stderr = sample sd / sqrt(total) """
        if total == 0:
            return cls(mean=float('nan'), stderr=float('nan'), reps=reps, accepted=accepted)
        p = hits / total
        return cls(mean=p, stderr=math.sqrt(p * (1 - p) / total), reps=reps, accepted=accepted)


def _check(t: float, size: int, reps: int):
    if not 0 <= t <= MAX_T:
        raise ValidationError('t must lie in [0, %g]: %s' % (MAX_T, t))
    if not 1 <= size <= MAX_WALKERS:
        raise ValidationError('N must lie in [1, %d]: %s' % (MAX_WALKERS, size))
    if not 1 <= reps <= MAX_REPS:
        raise ValidationError('reps must lie in [1, %d]: %s' % (MAX_REPS, reps))


def _chunk(args: Tuple[float, int, int, np.random.SeedSequence]) -> Tuple[np.ndarray, np.ndarray]:
    """ (K, J) of the accepted samples among `count` draws """
    t, size, count, seq = args
    rng = np.random.Generator(np.random.Philox(seq))
    counts = rng.poisson(2 * t, size=(count, size))
    depth = np.where(counts > 0, np.arange(1, size + 1), 0).max(axis=1)
    top = int(counts.max()) if counts.size else 0
    if top == 0:
        return np.zeros(count, dtype=np.int16), depth.astype(np.int16)
    start = -np.arange(size, dtype=np.int16)
    times = rng.uniform(0, t, size=(count, size, top))
    steps = rng.choice(np.array([-1, 1], dtype=np.int16), size=(count, size, top))
    live = np.arange(top) < counts[..., None]
    times[~live] = np.inf
    steps[~live] = 0
    width = size * top
    order = np.argsort(times.reshape(count, width), axis=1, kind='stable')
    walker = np.repeat(np.arange(size), top)[order]
    step = np.take_along_axis(steps.reshape(count, width), order, axis=1)
    delta = (walker[..., None] == np.arange(size)) * step[..., None]
    position = start + np.cumsum(delta, axis=1, dtype=np.int16)
    ok = np.all(position[:, -1, :] == start, axis=1)
    ok &= np.all(position[:, :, -1] >= -size + 1, axis=1)
    if size > 1:
        ok &= np.all(position[:, :, :-1] > position[:, :, 1:], axis=(1, 2))
    height = np.maximum(0, position[:, :, 0].max(axis=1))
    return height[ok].astype(np.int16), depth[ok].astype(np.int16)


def _chunks(t: float, size: int, reps: int, seed: int) -> Tuple[np.ndarray, np.ndarray]:
    sizes = [CHUNK_SIZE] * (reps // CHUNK_SIZE)
    if reps % CHUNK_SIZE:
        sizes.append(reps % CHUNK_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    parts = WorkerPool.map(_chunk, [(float(t), size, count, child) for count, child in zip(sizes, children)])
    heights = np.concatenate([h for h, _ in parts])
    depths = np.concatenate([d for _, d in parts])
    return heights, depths


class KJLaw(Logging):
    """ empirical joint law of (K, J) on the accepted samples """

    LOG_TAG = '[MC]'

    def __init__(self, t: float, size: int, reps: int, heights: np.ndarray, depths: np.ndarray):
        super().__init__()
        self.t = t
        self.size = size
        self.reps = reps
        self.heights = heights
        self.depths = depths
        largest = int(depths.max()) if depths.size else 0
        assert largest <= size, 'J=%d beyond N=%d' % (largest, size)
        if largest == size:
            self.warning(msg='J reached N=%d, finite-N truncation is visible' % size)

    @property
    def accepted(self) -> int:
        return int(self.heights.size)

    def cdf(self, k: int, j: int) -> MCEstimate:
        hits = int(np.count_nonzero((self.heights <= k) & (self.depths <= j)))
        return MCEstimate.from_counts(hits=hits, total=self.accepted, reps=self.reps, accepted=self.accepted)

    def frequency(self, k: int, j: int) -> MCEstimate:
        hits = int(np.count_nonzero((self.heights == k) & (self.depths == j)))
        return MCEstimate.from_counts(hits=hits, total=self.accepted, reps=self.reps, accepted=self.accepted)

    def counts(self) -> np.ndarray:
        kmax = int(self.heights.max()) if self.accepted else 0
        table = np.zeros((kmax + 1, self.size + 1), dtype=np.int64)
        np.add.at(table, (self.heights.astype(np.int64), self.depths.astype(np.int64)), 1)
        return table

    def duality_pvalue(self, permutations: int = 999, seed: int = 0) -> float:
        """
        Permutation test of (K, J) ~ (J, K). Under symmetry each sample may be
        swapped independently, so the count of a cell (a, b), a < b, is
        binomial(n_ab + n_ba, 1/2). The statistic is the total gap between the
        empirical CDF and its transpose.
        """
        top = max(int(self.heights.max()), int(self.depths.max())) if self.accepted else 0
        table = np.zeros((top + 1, top + 1), dtype=np.int64)
        np.add.at(table, (self.heights.astype(np.int64), self.depths.astype(np.int64)), 1)
        upper = np.triu_indices(top + 1, 1)
        pooled = table[upper] + table.T[upper]

        def statistic(counts: np.ndarray) -> int:
            grid = counts.cumsum(axis=0).cumsum(axis=1)
            return int(np.abs(grid - grid.T)[upper].sum())
        observed = statistic(table)
        rng = create_generator(seed=seed)
        extreme = 0
        for _ in range(permutations):
            swapped = table.copy()
            kept = rng.binomial(pooled, 0.5)
            swapped[upper] = kept
            swapped.T[upper] = pooled - kept
            if statistic(swapped) >= observed:
                extreme += 1
        return (extreme + 1) / (permutations + 1)

    def to_rows(self, prec_bits: int = 128) -> List[list]:
        """ k, j, count, empirical CDF, stderr, oracle e^{-t^2/2} G_{k,j}(t) """
        rows = []
        table = self.counts()
        for k in range(table.shape[0]):
            for j in range(self.size + 1):
                estimate = self.cdf(k, j)
                oracle = kj_oracle(t=self.t, k=k, j=j, prec_bits=prec_bits)
                rows.append([k, j, int(table[k, j]), estimate.mean, estimate.stderr, oracle])
        return rows


def simulate_event_prob(t: float, size: int, reps: int, seed: int) -> MCEstimate:
    """ frequency of A and B among reps independent ensembles """
    _check(t=t, size=size, reps=reps)
    heights, _ = _chunks(t=t, size=size, reps=reps, seed=seed)
    accepted = int(heights.size)
    return MCEstimate.from_counts(hits=accepted, total=reps, reps=reps, accepted=accepted)


def conditional_kj(t: float, size: int, reps: int, seed: int) -> KJLaw:
    _check(t=t, size=size, reps=reps)
    heights, depths = _chunks(t=t, size=size, reps=reps, seed=seed)
    if heights.size < MIN_ACCEPTED:
        raise InsufficientAcceptanceError('only %d of %d samples accepted (need %d)'
                                          % (heights.size, reps, MIN_ACCEPTED))
    return KJLaw(t=t, size=size, reps=reps, heights=heights, depths=depths)


def single_walker_return(t: float, reps: int, seed: int) -> MCEstimate:
    """ P{Z(t) = Z(0)} for one free walker; compare e^{-2t} I_0(2t) """
    if t < 0 or reps < 1:
        raise ValidationError('need t >= 0 and reps >= 1: %s, %s' % (t, reps))
    rng = create_generator(seed=seed)
    counts = rng.poisson(2 * t, size=reps)
    ups = rng.binomial(counts, 0.5)
    hits = int(np.count_nonzero(2 * ups == counts))
    return MCEstimate.from_counts(hits=hits, total=reps, reps=reps, accepted=hits)


def karlin_mcgregor_prob(t: float, size: int, prec_bits: int = DEFAULT_BITS) -> mpf:
    """ P(A and B) = e^{-2tN} det[I_{a-b}(2t) - I_{a+b}(2t)]_{a,b=1..N} """
    if t < 0 or size < 1:
        raise ValidationError('need t >= 0 and N >= 1: %s, %s' % (t, size))
    h = MomentSequence.continuous(t=t, lmax=2 * size, prec_bits=prec_bits)
    det = toeplitz_hankel_det(h=h, j=size)
    with mpmath.workprec(prec_bits):
        return mpmath.exp(-2 * mpf(t) * size) * det


def no_move_share(t: float, size: int, prec_bits: int = DEFAULT_BITS) -> mpf:
    """ P(J = 0 | A and B) = e^{-2tN} / P(A and B) """
    with mpmath.workprec(prec_bits):
        return mpmath.exp(-2 * mpf(t) * size) / karlin_mcgregor_prob(t=t, size=size, prec_bits=prec_bits)


def kj_oracle(t: float, k: int, j: int, prec_bits: int = 128) -> float:
    return float(joint_cdf(t=t, k=k, j=j, prec_bits=prec_bits).value)

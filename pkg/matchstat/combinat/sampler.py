
"""
    Uniform Sampler
    ~~~~~~~~~~~~~~~

    Streams come from numpy's Philox (a 64-bit counter-based generator), so
    a (seed, chunk) pair reproduces the same matchings on every platform.
"""

from typing import List, Tuple

import numpy as np

from ..utils import Log, WorkerPool
from ..common import ValidationError

from .matching import Matching, Arc, ScaledStats
from .stats import shape_stats


CHUNK_SIZE = 250


def create_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def _sample_arcs(n: int, rng: np.random.Generator) -> List[Arc]:
    free = list(range(1, 2 * n + 1))
    draws = rng.random(n)
    arcs = []
    for step in range(n):
        first = free.pop(0)
        # uniform partner among the remaining free points
        index = int(draws[step] * len(free))
        arcs.append((first, free.pop(index)))
    return arcs


def sample_matching(n: int, seed: int) -> Matching:
    """ uniform random matching of [2n], deterministic given seed """
    if n < 1:
        raise ValidationError('n must be >= 1: %d' % n)
    return Matching(arcs=_sample_arcs(n=n, rng=create_generator(seed=seed)))


def _scaled_chunk(args: Tuple[int, int, np.random.SeedSequence]) -> np.ndarray:
    n, reps, seq = args
    rng = np.random.Generator(np.random.Philox(seq))
    out = np.empty((reps, 2))
    for r in range(reps):
        c, d = shape_stats(_sample_arcs(n=n, rng=rng))
        out[r, 0] = ScaledStats.scale(n, c)
        out[r, 1] = ScaledStats.scale(n, d)
    return out


def sample_scaled_stats(n: int, reps: int, seed: int) -> np.ndarray:
    """ reps x 2 array of (cro, nes) rescaled; chunking is independent of the pool size """
    sizes = [CHUNK_SIZE] * (reps // CHUNK_SIZE)
    if reps % CHUNK_SIZE:
        sizes.append(reps % CHUNK_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    tasks = [(n, size, child) for size, child in zip(sizes, children)]
    parts = WorkerPool.map(_scaled_chunk, tasks)
    return np.vstack(parts)


def jackknife_covariance(x: np.ndarray, y: np.ndarray) -> Tuple[float, float]:
    """ sample covariance and its delete-one jackknife standard error """
    size = len(x)
    estimate = float(np.cov(x, y, ddof=1)[0, 1])
    # leave-one-out plug-in covariances, all at once
    sx, sy, sxy = x.sum(), y.sum(), (x * y).sum()
    m = size - 1
    mx = (sx - x) / m
    my = (sy - y) / m
    loo = (sxy - x * y) / m - mx * my
    stderr = float(np.sqrt((size - 1) / size * np.sum((loo - loo.mean()) ** 2)))
    return estimate, stderr


def mc_scaled_covariance(n: int, reps: int, seed: int) -> Tuple[float, float]:
    if reps < 2:
        raise ValidationError('reps must be >= 2: %d' % reps)
    if n < 1:
        raise ValidationError('n must be >= 1: %d' % n)
    data = sample_scaled_stats(n=n, reps=reps, seed=seed)
    estimate, stderr = jackknife_covariance(x=data[:, 0], y=data[:, 1])
    Log.info(msg='[MC] scaled covariance n=%d reps=%d: %.6f +/- %.6f' % (n, reps, estimate, stderr))
    return estimate, stderr

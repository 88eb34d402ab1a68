
"""
    Poissonized Covariance
    ~~~~~~~~~~~~~~~~~~~~~~

    Hoeffding's formula for integer-valued X = Cro_t, Y = Nes_t:

        Cov(X, Y) = sum_{k, j >= 0} [P{X <= k, Y <= j} - P{X <= k} P{Y <= j}]

    summed over the window of levels where the common marginal lies in
    (eps, 1 - eps). Each omitted term is bounded by
    min(F(k), F(j), 1 - F(k), 1 - F(j)) <= sqrt(m_k m_j), m = min(F, 1 - F).
"""

import math
from typing import List, Tuple

import mpmath
from mpmath import mpf

from ..utils import Logging, WorkerPool
from ..common import ValidationError
from ..common import DEFAULT_BITS
from ..combinat import poisson_sum
from ..opflow import joint_cdf, nes_marginal_cdf


EPSILON = 1e-10
# marginals are followed this far past the window for the tail bound
NEGLIGIBLE = 1e-30
MAX_T = 60


class CovarianceResult:

    def __init__(self, t, covariance: float, variance: float, mean: float, tail_bound: float,
                 window: Tuple[int, int], route: str):
        super().__init__()
        self.t = t
        self.covariance = covariance
        self.variance = variance
        self.mean = mean
        self.tail_bound = tail_bound
        self.window = window
        self.route = route

    @property
    def correlation(self) -> float:
        if self.variance <= 0:
            return float('nan')
        return self.covariance / self.variance

    def to_dict(self) -> dict:
        return {
            't': self.t,
            'covariance': self.covariance,
            'correlation': self.correlation,
            'variance': self.variance,
            'mean': self.mean,
            'tail_bound': self.tail_bound,
            'window': list(self.window),
            'route': self.route,
        }

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s t=%s cov=%.10f cor=%.10f route=%s />' % (clazz, self.t, self.covariance, self.correlation,
                                                             self.route)


def _marginal_task(args: Tuple[float, int, int]) -> mpf:
    t, j, bits = args
    return nes_marginal_cdf(t=t, j=j, prec_bits=bits).value


def _joint_task(args: Tuple[float, int, int, int]) -> float:
    t, k, j, bits = args
    return float(joint_cdf(t=t, k=k, j=j, prec_bits=bits).value)


def _moments(cdf: List[float]) -> Tuple[float, float]:
    """ mean and variance of a nonnegative integer variable from F(0..K) """
    mean = math.fsum(1 - f for f in cdf)
    second = math.fsum((2 * k + 1) * (1 - f) for k, f in enumerate(cdf))
    return mean, second - mean * mean


class PoissonizedCovariance(Logging):

    LOG_TAG = '[DET]'

    def __init__(self, prec_bits: int = DEFAULT_BITS, eps: float = EPSILON):
        super().__init__()
        self.prec_bits = prec_bits
        self.eps = eps

    def marginals(self, t: float) -> List[mpf]:
        """ F(0), F(1), ... until 1 - F drops below the negligible level """
        values = []
        j = 0
        batch = max(8, WorkerPool.size())
        while not values or 1 - values[-1] > NEGLIGIBLE:
            tasks = [(t, level, self.prec_bits) for level in range(j, j + batch)]
            values.extend(WorkerPool.map(_marginal_task, tasks))
            j += batch
        return values

    def covariance(self, t: float) -> CovarianceResult:
        t = float(t)
        if t < 0 or t > MAX_T:
            raise ValidationError('t must lie in [0, %d]: %s' % (MAX_T, t))
        if t == 0:
            return CovarianceResult(t=t, covariance=0.0, variance=0.0, mean=0.0, tail_bound=0.0, window=(0, 0),
                                    route='det')
        exact = self.marginals(t)
        cdf = [float(f) for f in exact]
        inside = [k for k, f in enumerate(cdf) if self.eps < f < 1 - self.eps]
        lo, hi = (inside[0], inside[-1]) if inside else (0, 0)
        # joint law is symmetric in (k, j)
        cells = [(k, j) for k in range(lo, hi + 1) for j in range(k, hi + 1)]
        values = WorkerPool.map(_joint_task, [(t, k, j, self.prec_bits) for k, j in cells])
        total = []
        for (k, j), joint in zip(cells, values):
            term = joint - cdf[k] * cdf[j]
            total.append(term if k == j else 2 * term)
        covariance = math.fsum(total)
        roots = [float(mpmath.sqrt(min(f, 1 - f))) for f in exact]
        everywhere = math.fsum(roots)
        window = math.fsum(roots[lo:hi + 1])
        tail = everywhere * everywhere - window * window
        mean, variance = _moments(cdf)
        self.info(msg='t=%g window=[%d, %d] cells=%d cov=%.10f tail<=%.3e' % (t, lo, hi, len(cells),
                                                                            covariance, tail))
        return CovarianceResult(t=t, covariance=covariance, variance=variance, mean=mean, tail_bound=tail,
                                window=(lo, hi), route='det')


def covariance_poissonized(t: float, prec_bits: int = DEFAULT_BITS, eps: float = EPSILON) -> CovarianceResult:
    return PoissonizedCovariance(prec_bits=prec_bits, eps=eps).covariance(t=t)


def correlation_poissonized(t: float, prec_bits: int = DEFAULT_BITS, eps: float = EPSILON) -> float:
    return covariance_poissonized(t=t, prec_bits=prec_bits, eps=eps).correlation


def covariance_poisson_route(t: float, nmax: int = 6, bits: int = 128) -> CovarianceResult:
    """ the same sums from exact enumeration tables, sizes n <= nmax """
    t = float(t)
    if t < 0:
        raise ValidationError('t must be >= 0: %s' % t)
    levels = range(nmax + 1)
    joint = [[poisson_sum(t=t, k=k, j=j, nmax=nmax, bits=bits) for j in levels] for k in levels]
    with mpmath.workprec(bits):
        cdf = [joint[k][nmax][0] for k in levels]
        covariance = mpf(0)
        for k in levels:
            for j in levels:
                covariance += joint[k][j][0] - cdf[k] * cdf[j]
        tail = joint[0][0][1]
    cdf = [float(f) for f in cdf]
    mean, variance = _moments(cdf)
    return CovarianceResult(t=t, covariance=float(covariance), variance=variance, mean=mean, tail_bound=float(tail),
                            route='poisson', window=(0, nmax))

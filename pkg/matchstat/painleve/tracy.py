
"""
    Tracy-Widom Distributions
    ~~~~~~~~~~~~~~~~~~~~~~~~~

        F_GUE(x) = exp(-int_x^oo (s - x) q(s)^2 ds)
        F(x)     = exp(-(1/2) int_x^oo q(s) ds) F_GUE(x)^{1/2}      (GOE)

    Derivatives come from closed forms in q, q', u:

        (log F)'  = (q - u)/2          F''/F         = (q - u)^2/4 + (q' - q^2)/2
        (log F_GUE)' = -u              F_GUE''/F_GUE = u^2 - q^2
"""

from typing import Optional

import numpy as np
from scipy.integrate import simpson
from scipy.optimize import brentq

from ..common import ValidationError, RangeError

from .hastings import HMSolution, solve_hm


GOE = 'goe'
GUE = 'gue'

# arguments are kept this far inside the solution grid
MARGIN = 1.0


class TWDistribution:

    def __init__(self, which: str, solution: HMSolution):
        super().__init__()
        which = which.lower()
        if which not in (GOE, GUE):
            raise ValidationError('unknown Tracy-Widom family: %s' % which)
        self.__which = which
        self.__solution = solution
        self.__moments = None

    @property
    def which(self) -> str:
        return self.__which

    @property
    def solution(self) -> HMSolution:
        return self.__solution

    @property
    def x_min(self) -> float:
        return self.__solution.s_min + MARGIN

    @property
    def x_max(self) -> float:
        return self.__solution.s_max - MARGIN

    def _check(self, x):
        xa = np.asanyarray(x, dtype=float)
        if np.any(xa < self.x_min) or np.any(xa > self.x_max):
            raise RangeError('x outside [%g, %g]' % (self.x_min, self.x_max))
        return xa

    def log_cdf(self, x):
        xa = self._check(x)
        if self.__which == GOE:
            return self.__solution.log_f_goe(xa)
        return self.__solution.log_f_gue(xa)

    def cdf(self, x):
        return np.exp(self.log_cdf(x))

    def _ratios(self, xa):
        """ (F'/F, F''/F) """
        q, qp, u, _, _, _ = self.__solution.values(xa)
        if self.__which == GOE:
            d = q - u
            return d / 2, d * d / 4 + (qp - q * q) / 2
        return -u, u * u - q * q

    def pdf(self, x):
        xa = self._check(x)
        first, _ = self._ratios(xa)
        return self.cdf(xa) * first

    def pdf_prime(self, x):
        xa = self._check(x)
        _, second = self._ratios(xa)
        return self.cdf(xa) * second

    def derivative(self, x, order: int = 0):
        if order == 0:
            return self.cdf(x)
        elif order == 1:
            return self.pdf(x)
        elif order == 2:
            return self.pdf_prime(x)
        raise ValidationError('derivative order must be 0, 1 or 2: %s' % order)

    def _grid_moments(self):
        if self.__moments is None:
            s = self.__solution.s
            xs = s[(s >= self.x_min) & (s <= self.x_max)]
            density = self.pdf(xs)
            mass = simpson(density, x=xs)
            mean = simpson(xs * density, x=xs)
            second = simpson(xs * xs * density, x=xs)
            self.__moments = (mass, mean, second)
        return self.__moments

    def mean(self) -> float:
        _, mean, _ = self._grid_moments()
        return float(mean)

    def variance(self) -> float:
        _, mean, second = self._grid_moments()
        return float(second - mean * mean)

    def ppf(self, p: float) -> float:
        if not 0 < p < 1:
            raise ValidationError('p must lie in (0, 1): %s' % p)
        lo, hi = self.x_min, self.x_max
        if self.cdf(lo) >= p or self.cdf(hi) <= p:
            raise RangeError('quantile %s outside [%g, %g]' % (p, lo, hi))
        return float(brentq(lambda x: float(self.cdf(x)) - p, lo, hi, xtol=1e-12))

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s which=%s solution=%s />' % (clazz, self.which, self.solution)


def tw_distribution(which: str, solution: Optional[HMSolution] = None) -> TWDistribution:
    if solution is None:
        solution = solve_hm()
    return TWDistribution(which=which, solution=solution)


def tw_cdf(which: str, x, solution: Optional[HMSolution] = None):
    return tw_distribution(which=which, solution=solution).cdf(x)


def tw_pdf(which: str, x, solution: Optional[HMSolution] = None):
    return tw_distribution(which=which, solution=solution).pdf(x)


def tw_pdf_prime(which: str, x, solution: Optional[HMSolution] = None):
    return tw_distribution(which=which, solution=solution).pdf_prime(x)


"""
    Scaling Maps
    ~~~~~~~~~~~~

    Integer levels and the rescaled coordinates used by the asymptotic
    formulas:

        j       = [t + x t^{1/3}/2]                x_t     = ((2j + 1) - 2t) / t^{1/3}
        l       = [2t + x t^{1/3}]                 x^(t)   = (l - 2t) / t^{1/3}
        gamma   = n / 2t                           s(gamma) = t^{2/3} a(gamma)
"""

import math
from typing import Optional

import numpy as np

from ..common import DomainError, ValidationError


# below this |gamma - 1| the closed forms lose digits to cancellation
SERIES_RADIUS = 1e-4


def a_series(gamma: float) -> float:
    """ 2(gamma - 1) - (gamma - 1)^2 / 15 """
    e = gamma - 1
    return 2 * e - e * e / 15


def a_closed(gamma: float) -> float:
    if gamma >= 1:
        root = math.sqrt(gamma * gamma - 1)
        return (3 * (gamma * math.log(gamma + root) - root)) ** (2.0 / 3)
    root = math.sqrt(1 - gamma * gamma)
    return -(3 * (root - gamma * math.acos(gamma))) ** (2.0 / 3)


def a_of_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0 < gamma < 1.5:
        raise DomainError('gamma must lie in (0, 1.5): %s' % gamma)
    if abs(gamma - 1) < SERIES_RADIUS:
        return a_series(gamma)
    return a_closed(gamma)


def cube_root(t: float) -> float:
    return float(np.cbrt(t))


def s_of_gamma(t: float, gamma: float) -> float:
    return cube_root(t) ** 2 * a_of_gamma(gamma)


def s_expansion(t: float, gamma: float) -> float:
    """ 2 t^{2/3} (gamma - 1) - (2 t^{2/3} (gamma - 1))^2 / (60 t^{2/3}) """
    t23 = cube_root(t) ** 2
    lead = 2 * t23 * (gamma - 1)
    return lead - lead * lead / (60 * t23)


def s_expansion_residual(t: float, gamma: float) -> float:
    return abs(s_of_gamma(t, gamma) - s_expansion(t, gamma))


def nes_level(t: float, x: float) -> int:
    """ j = [t + x t^{1/3} / 2] """
    return int(math.floor(t + x * cube_root(t) / 2))


def lt_level(t: float, x: float) -> int:
    """ l = [2t + x t^{1/3}] """
    return int(math.floor(2 * t + x * cube_root(t)))


class ScalingPoint:
    """ (t, x) or (t, x, x') with the derived levels and Langer coordinates """

    def __init__(self, t: float, x: float, x_prime: Optional[float] = None):
        super().__init__()
        if t <= 0:
            raise ValidationError('t must be > 0: %s' % t)
        self.t = float(t)
        self.x = float(x)
        self.x_prime = None if x_prime is None else float(x_prime)

    @property
    def j(self) -> int:
        return nes_level(self.t, self.x)

    @property
    def k(self) -> Optional[int]:
        if self.x_prime is None:
            return None
        return nes_level(self.t, self.x_prime)

    @property
    def l(self) -> int:
        return lt_level(self.t, self.x)

    @property
    def x_t(self) -> float:
        return ((2 * self.j + 1) - 2 * self.t) / cube_root(self.t)

    @property
    def x_prime_t(self) -> Optional[float]:
        k = self.k
        if k is None:
            return None
        return ((2 * k + 1) - 2 * self.t) / cube_root(self.t)

    @property
    def x_upper_t(self) -> float:
        """ x^(t) for the permutation length """
        return (self.l - 2 * self.t) / cube_root(self.t)

    @property
    def m(self) -> Optional[int]:
        k = self.k
        if k is None:
            return None
        return self.j + k + 1

    @property
    def gamma(self) -> float:
        """ n / 2t at n = 2j + 1 """
        return (2 * self.j + 1) / (2 * self.t)

    @property
    def gamma_tilde(self) -> Optional[float]:
        """ (2m - n) / 2t at n = 2j + 1, that is (2k + 1) / 2t """
        k = self.k
        if k is None:
            return None
        return (2 * k + 1) / (2 * self.t)

    @property
    def s(self) -> float:
        return s_of_gamma(self.t, self.gamma)

    @property
    def s_tilde(self) -> Optional[float]:
        gamma = self.gamma_tilde
        return None if gamma is None else s_of_gamma(self.t, gamma)

    def to_dict(self) -> dict:
        info = {'t': self.t, 'x': self.x, 'j': self.j, 'x_t': self.x_t, 'l': self.l, 'x_upper_t': self.x_upper_t}
        if self.x_prime is not None:
            info['x_prime'] = self.x_prime
            info['k'] = self.k
            info['x_prime_t'] = self.x_prime_t
        return info

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s t=%g x=%g x_prime=%s j=%d />' % (clazz, self.t, self.x, self.x_prime, self.j)

    @classmethod
    def from_levels(cls, t: float, j: int, k: Optional[int] = None):
        """ point in the middle of the steps that map to levels j (and k) """
        c = cube_root(t)
        x = 2 * (j + 0.5 - t) / c
        x_prime = None if k is None else 2 * (k + 0.5 - t) / c
        return cls(t=t, x=x, x_prime=x_prime)

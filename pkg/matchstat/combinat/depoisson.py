
"""
    Poissonization
    ~~~~~~~~~~~~~~

    With the size drawn from Poisson(t^2/2),

        P{Cro_t <= k, Nes_t <= j} = e^{-t^2/2} sum_n g_{k,j}(n) t^{2n} / (2n)!

    and a_n = g_{k,j}(n) / (2n-1)!! is nonincreasing in n. The
    de-Poissonization sandwich compares a_n with the Poisson transform
    phi(x) = e^{-x^2} sum_n a_n x^{2n} / n! at shifted arguments.
"""

import math
from fractions import Fraction
from typing import List, Tuple

import mpmath
from mpmath import mpf

from ..common import ValidationError

from .enumeration import gkj_table, double_factorial, MAX_ENUM_N


def size_probabilities(k: int, j: int, nmax: int) -> List[Fraction]:
    """ a_n = P{cro_n <= k, nes_n <= j} for n = 0..nmax """
    return [Fraction(gkj_table(n=n).get(k, j), double_factorial(n)) for n in range(nmax + 1)]


def poisson_sum(t: float, k: int, j: int, nmax: int = 8, bits: int = 128) -> Tuple[mpf, mpf]:
    """
    Truncated Poissonized joint CDF.

    :return: (value, tail) where the neglected terms lie in [0, tail]
    """
    if nmax > MAX_ENUM_N:
        raise ValidationError('nmax=%d beyond the enumeration guard' % nmax)
    with mpmath.workprec(bits):
        t = mpf(t)
        lam = t * t / 2
        weight = mpmath.exp(-lam)
        total = mpf(0)
        mass = mpf(0)
        for n in range(nmax + 1):
            # Poisson(t^2/2) mass at n
            p_n = weight * lam ** n / mpmath.factorial(n)
            a_n = mpf(gkj_table(n=n).get(k, j)) / double_factorial(n)
            total += p_n * a_n
            mass += p_n
        tail = max(mpf(0), 1 - mass)
        return +total, +tail


def poisson_transform(x: mpf, a: List[Fraction], upper: bool) -> mpf:
    """
    phi(x) with a_n known for n <= N; beyond N use a_n >= 0 (lower
    estimate) or a_n <= a_N (upper estimate), both valid by monotonicity.
    """
    lam = x * x
    weight = mpmath.exp(-lam)
    total = mpf(0)
    mass = mpf(0)
    for n, a_n in enumerate(a):
        p_n = weight * lam ** n / mpmath.factorial(n)
        total += p_n * mpf(a_n.numerator) / a_n.denominator
        mass += p_n
    if upper:
        last = a[-1]
        total += max(mpf(0), 1 - mass) * mpf(last.numerator) / last.denominator
    return total


class SandwichRow:

    def __init__(self, n: int, a_n: Fraction, lower: mpf, upper: mpf):
        super().__init__()
        self.n = n
        self.a_n = a_n
        self.lower = lower
        self.upper = upper

    @property
    def passed(self) -> bool:
        value = mpf(self.a_n.numerator) / self.a_n.denominator
        return self.lower <= value <= self.upper

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'a_n': self.a_n,
            'lower': self.lower,
            'upper': self.upper,
            'passed': self.passed,
        }


def depoissonization_check(k: int, j: int, nmin: int = 4, nmax: int = 8, s: float = 1.0,
                           bits: int = 128) -> List[SandwichRow]:
    """
    phi(sqrt(mu_n)) - n^{-s} <= a_n <= phi(sqrt(nu_n)) + n^{-s}
    with mu_n = n + 2 sqrt(s n log n) and nu_n = max(0, n - 2 sqrt(s n log n)).
    """
    if nmin < 2 or nmax > MAX_ENUM_N or nmin > nmax:
        raise ValidationError('range error: [%d, %d]' % (nmin, nmax))
    a = size_probabilities(k=k, j=j, nmax=nmax)
    rows = []
    with mpmath.workprec(bits):
        for n in range(nmin, nmax + 1):
            shift = 2 * math.sqrt(s * n * math.log(n))
            mu = mpf(n + shift)
            nu = mpf(max(0.0, n - shift))
            slack = mpf(n) ** (-s)
            lower = poisson_transform(mpmath.sqrt(mu), a=a, upper=True) - slack
            upper = poisson_transform(mpmath.sqrt(nu), a=a, upper=False) + slack
            rows.append(SandwichRow(n=n, a_n=a[n], lower=lower, upper=upper))
    return rows

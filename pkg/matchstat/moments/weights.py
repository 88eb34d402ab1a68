
"""
    Trigonometric Moments
    ~~~~~~~~~~~~~~~~~~~~~

    h_l = \\oint z^{-l} d mu(z) for the even weights

        discrete:   mu_m  = (1/2m) sum_r e^{2t cos(pi r/m)} delta(z - w^r),  w = e^{i pi/m}
        continuous: mu_oo = e^{t(z + 1/z)} |dz| / 2 pi

    so that h_l = (1/2m) sum_r cos(pi r l/m) e^{2t cos(pi r/m)} and
    h_l = I_l(2t) respectively.
"""

from typing import Optional, Tuple, Union, List

import mpmath
from mpmath import mpf

from ..utils import SharedCacheManager
from ..common import ValidationError, PrecisionError
from ..common import DEFAULT_BITS, GUARD_BITS


Real = Union[int, float, str, mpf]

DISCRETE = 'discrete'
CONTINUOUS = 'continuous'


def _check_t(t: Real) -> mpf:
    value = mpf(t)
    if value < 0:
        raise ValidationError('t must be >= 0: %s' % t)
    return value


def _discrete_exponentials(m: int, t: mpf) -> List[mpf]:
    """ e^{2t cos(pi r/m)} for r = 0..m """
    return [mpmath.exp(2 * t * mpmath.cospi(mpf(r) / m)) for r in range(m + 1)]


def _discrete_sum(l: int, m: int, weights: List[mpf]) -> Tuple[mpf, mpf]:
    """ (h_l, largest term); r and 2m-r are folded so the sum is real by construction """
    sign = -1 if l % 2 else 1
    total = weights[0] + sign * weights[m]
    for r in range(1, m):
        total += 2 * mpmath.cospi(mpf(r * l) / m) * weights[r]
    return total / (2 * m), weights[0] / (2 * m)


def _lost_bits(value: mpf, largest: mpf) -> int:
    if value == 0:
        return 1 << 30
    return max(0, int(mpmath.log(abs(largest / value), 2)) + 1)


def h_discrete(l: int, m: int, t: Real, prec_bits: int = DEFAULT_BITS) -> mpf:
    if m < 1:
        raise ValidationError('m must be >= 1: %d' % m)
    values = _discrete_values(m=m, t=t, lmax=min(abs(l) % (2 * m), 2 * m - abs(l) % (2 * m)),
                              prec_bits=prec_bits)
    return values[-1]


def _discrete_values(m: int, t: Real, lmax: int, prec_bits: int) -> Tuple[mpf, ...]:
    """ h_0..h_lmax at prec_bits, re-run with more guard bits on cancellation """
    guard = GUARD_BITS
    for _ in range(2):
        with mpmath.workprec(prec_bits + guard):
            tt = _check_t(t)
            if tt == 0:
                return tuple(mpf(1) if l % (2 * m) == 0 else mpf(0) for l in range(lmax + 1))
            weights = _discrete_exponentials(m=m, t=tt)
            array = []
            lost = 0
            for l in range(lmax + 1):
                value, largest = _discrete_sum(l=l, m=m, weights=weights)
                lost = max(lost, _lost_bits(value=value, largest=largest))
                array.append(value)
        if lost <= guard - 8:
            with mpmath.workprec(prec_bits):
                return tuple(+value for value in array)
        guard = lost + GUARD_BITS
    raise PrecisionError('discrete moments m=%d t=%s lose %d bits' % (m, t, lost),
                         suggested_bits=prec_bits + lost + GUARD_BITS)


def h_continuous(l: int, t: Real, prec_bits: int = DEFAULT_BITS) -> mpf:
    """ I_|l|(2t) """
    with mpmath.workprec(prec_bits + GUARD_BITS):
        tt = _check_t(t)
        value = mpmath.besseli(abs(l), 2 * tt)
    with mpmath.workprec(prec_bits):
        return +value


def p_transition(a: int, t: Real, prec_bits: int = DEFAULT_BITS) -> mpf:
    """ continuous-time simple random walk (rate 1 each way): P{Z(t) - Z(0) = a} """
    with mpmath.workprec(prec_bits + GUARD_BITS):
        tt = _check_t(t)
        value = mpmath.exp(-2 * tt) * mpmath.besseli(abs(a), 2 * tt)
    with mpmath.workprec(prec_bits):
        return +value


def aliased_bessel_sum(l: int, m: int, t: Real, terms: int = 20, prec_bits: int = DEFAULT_BITS) -> mpf:
    """ sum_{|n| <= terms} I_{l + 2mn}(2t), the Fourier alias of the discrete moment """
    with mpmath.workprec(prec_bits + GUARD_BITS):
        tt = _check_t(t)
        total = mpf(0)
        for n in range(-terms, terms + 1):
            total += mpmath.besseli(abs(l + 2 * m * n), 2 * tt)
    with mpmath.workprec(prec_bits):
        return +total


class MomentSequence:
    """
        Moments h_0..h_lmax of one weight at one t
        ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

        Negative indices use h_{-l} = h_l; the discrete kind is also 2m-periodic.
    """

    def __init__(self, kind: str, t: Real, prec_bits: int, values: Tuple[mpf, ...], m: Optional[int] = None):
        super().__init__()
        assert kind in (DISCRETE, CONTINUOUS), 'moment kind error: %s' % kind
        assert kind == CONTINUOUS or m is not None, 'discrete moments need m'
        self.__kind = kind
        self.__t = t
        self.__prec_bits = prec_bits
        self.__values = values
        self.__m = m

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def is_discrete(self) -> bool:
        return self.__kind == DISCRETE

    @property
    def m(self) -> Optional[int]:
        return self.__m

    @property
    def t(self) -> Real:
        return self.__t

    @property
    def prec_bits(self) -> int:
        return self.__prec_bits

    @property
    def lmax(self) -> int:
        """ largest |l| available (every l for the discrete kind) """
        if self.is_discrete and len(self.__values) == self.__m + 1:
            return 1 << 62
        return len(self.__values) - 1

    def h(self, l: int) -> mpf:
        l = abs(l)
        if self.is_discrete:
            m2 = 2 * self.__m
            l %= m2
            l = min(l, m2 - l)
        if l >= len(self.__values):
            raise ValidationError('moment h_%d not computed (lmax=%d)' % (l, len(self.__values) - 1))
        return self.__values[l]

    def __getitem__(self, l: int) -> mpf:
        return self.h(l)

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        if self.is_discrete:
            return '<%s kind=discrete m=%d t=%s bits=%d />' % (clazz, self.m, self.t, self.prec_bits)
        return '<%s kind=continuous t=%s lmax=%d bits=%d />' % (clazz, self.t, self.lmax, self.prec_bits)

    #
    #   Factories
    #

    @classmethod
    def discrete(cls, m: int, t: Real, prec_bits: int = DEFAULT_BITS, lmax: int = None):
        """ moments of the 2m-atom weight; h_0..h_m determine all of them """
        if m < 1:
            raise ValidationError('m must be >= 1: %d' % m)
        top = m if lmax is None else min(m, lmax)

        def create():
            values = _discrete_values(m=m, t=t, lmax=top, prec_bits=prec_bits)
            return cls(kind=DISCRETE, t=t, prec_bits=prec_bits, values=values, m=m)
        man = SharedCacheManager()
        return man.fetch(name='moments', key=(DISCRETE, m, top, str(t), prec_bits), creator=create)

    @classmethod
    def continuous(cls, t: Real, lmax: int, prec_bits: int = DEFAULT_BITS):
        if lmax < 0:
            raise ValidationError('lmax must be >= 0: %d' % lmax)

        def create():
            values = tuple(h_continuous(l=l, t=t, prec_bits=prec_bits) for l in range(lmax + 1))
            return cls(kind=CONTINUOUS, t=t, prec_bits=prec_bits, values=values)
        man = SharedCacheManager()
        return man.fetch(name='moments', key=(CONTINUOUS, lmax, str(t), prec_bits), creator=create)

    @classmethod
    def create(cls, kind: str, t: Real, lmax: int, prec_bits: int = DEFAULT_BITS, m: int = None):
        if kind == DISCRETE:
            if m is None:
                raise ValidationError('discrete moments need m')
            return cls.discrete(m=m, t=t, prec_bits=prec_bits, lmax=lmax)
        elif kind == CONTINUOUS:
            return cls.continuous(t=t, lmax=lmax, prec_bits=prec_bits)
        raise ValidationError('unknown moment kind: %s' % kind)


"""
    Distribution Functions
    ~~~~~~~~~~~~~~~~~~~~~~

        P{Cro_t <= k, Nes_t <= j} = e^{-t^2/2} H_j   (discrete weight, m = j + k + 1)
        P{Nes_t <= j}             = e^{-t^2/2} H_j   (continuous weight)
        P{L_t <= l}               = e^{-t^2}   T_l   (continuous weight)
"""

from enum import Enum
from typing import Optional

import mpmath
from mpmath import mpf

from ..common import ValidationError, PrecisionError, Certificate
from ..common import DEFAULT_BITS, TOLERANCE_BITS
from ..moments import MomentSequence
from ..detkernel import toeplitz_det_certified, toeplitz_hankel_det_certified
from ..combinat import poisson_sum


class Route(Enum):
    DETERMINANT = 'det'
    PROP1_QUADRATURE = 'prop1'
    POISSON_TRUNCATION = 'poisson'


JOINT = 'joint'
NES = 'nes'
LT = 'lt'


class DistributionPoint:
    """ One value of a distribution function, with the route that produced it """

    def __init__(self, which: str, t, value: mpf, log_value: mpf, route: Route, prec_bits: int,
                 k: Optional[int] = None, j: Optional[int] = None, l: Optional[int] = None,
                 certificate: Optional[Certificate] = None, tail: Optional[mpf] = None):
        super().__init__()
        self.which = which
        self.t = t
        self.k = k
        self.j = j
        self.l = l
        self.value = value
        self.log_value = log_value
        self.route = route
        self.prec_bits = prec_bits
        self.certificate = certificate
        self.tail = tail

    def to_dict(self) -> dict:
        info = {'which': self.which, 't': self.t}
        for key in ('k', 'j', 'l'):
            value = getattr(self, key)
            if value is not None:
                info[key] = value
        info['value_decimal'] = self.value
        info['log_value'] = self.log_value
        info['route'] = self.route.value
        info['prec_bits'] = self.prec_bits
        if self.certificate is not None:
            info['certificate'] = self.certificate.to_dict()
        if self.tail is not None:
            info['tail_bound'] = self.tail
        return info

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s which=%s t=%s k=%s j=%s l=%s value="%s" route=%s />' % (clazz, self.which, self.t, self.k, self.j,
                                                                          self.l, mpmath.nstr(self.value, 15),
                                                                          self.route.value)


def _check_levels(t, **levels):
    if mpf(t) < 0:
        raise ValidationError('t must be >= 0: %s' % t)
    for name, value in levels.items():
        if value is None or value < 0:
            raise ValidationError('%s must be >= 0: %s' % (name, value))


def _normalise(det: mpf, cert: Certificate, log_weight: mpf) -> (mpf, mpf):
    """ value = e^{log_weight} det; a non-positive certified determinant is an underflowed zero """
    with mpmath.workprec(cert.bits):
        if det <= 0:
            if not cert.passed:
                raise PrecisionError('determinant %s not certified' % mpmath.nstr(det, 8),
                                     suggested_bits=cert.bits * 2)
            return mpf(0), mpf('-inf')
        log_value = mpmath.log(det) + log_weight
        return mpmath.exp(log_value), log_value


def joint_cdf(t, k: int, j: int, prec_bits: int = DEFAULT_BITS,
              tolerance_bits: int = TOLERANCE_BITS) -> DistributionPoint:
    _check_levels(t, k=k, j=j)
    m = j + k + 1
    h = MomentSequence.discrete(m=m, t=t, prec_bits=prec_bits, lmax=2 * j)
    det, cert = toeplitz_hankel_det_certified(h=h, j=j, tolerance_bits=tolerance_bits)
    with mpmath.workprec(cert.bits):
        tt = mpf(t)
        value, log_value = _normalise(det=det, cert=cert, log_weight=-tt * tt / 2)
    return DistributionPoint(which=JOINT, t=t, k=k, j=j, value=value, log_value=log_value,
                             route=Route.DETERMINANT, prec_bits=cert.bits, certificate=cert)


def nes_marginal_cdf(t, j: int, prec_bits: int = DEFAULT_BITS,
                     tolerance_bits: int = TOLERANCE_BITS) -> DistributionPoint:
    _check_levels(t, j=j)
    h = MomentSequence.continuous(t=t, lmax=2 * j, prec_bits=prec_bits)
    det, cert = toeplitz_hankel_det_certified(h=h, j=j, tolerance_bits=tolerance_bits)
    with mpmath.workprec(cert.bits):
        tt = mpf(t)
        value, log_value = _normalise(det=det, cert=cert, log_weight=-tt * tt / 2)
    return DistributionPoint(which=NES, t=t, j=j, value=value, log_value=log_value,
                             route=Route.DETERMINANT, prec_bits=cert.bits, certificate=cert)


def lt_cdf(t, l: int, prec_bits: int = DEFAULT_BITS, tolerance_bits: int = TOLERANCE_BITS) -> DistributionPoint:
    _check_levels(t, l=l)
    h = MomentSequence.continuous(t=t, lmax=max(l, 1), prec_bits=prec_bits)
    det, cert = toeplitz_det_certified(h=h, n=l, tolerance_bits=tolerance_bits)
    with mpmath.workprec(cert.bits):
        tt = mpf(t)
        value, log_value = _normalise(det=det, cert=cert, log_weight=-tt * tt)
    return DistributionPoint(which=LT, t=t, l=l, value=value, log_value=log_value,
                             route=Route.DETERMINANT, prec_bits=cert.bits, certificate=cert)


def poisson_truncation_cdf(t, k: int, j: int, nmax: int = 8, prec_bits: int = 128) -> DistributionPoint:
    """ joint CDF from exact tables, sizes n <= nmax; the neglected mass is reported as tail """
    _check_levels(t, k=k, j=j)
    value, tail = poisson_sum(t=t, k=k, j=j, nmax=nmax, bits=prec_bits)
    with mpmath.workprec(prec_bits):
        log_value = mpmath.log(value) if value > 0 else mpf('-inf')
    return DistributionPoint(which=JOINT, t=t, k=k, j=j, value=value, log_value=log_value,
                             route=Route.POISSON_TRUNCATION, prec_bits=prec_bits, tail=tail)



"""
    Precision
    ~~~~~~~~~

    BigReal is mpmath.mpf; precision is always scoped with mpmath.workprec,
    never set globally, so worker processes and threads stay independent.
"""

import math
from fractions import Fraction
from typing import Callable, Union, Optional

import mpmath
from mpmath import mpf

from ..utils import Log

from .errors import PrecisionError


BigReal = mpf


DEFAULT_BITS = 256
GUARD_BITS = 64
CEILING_BITS = 65536
TOLERANCE_BITS = 100


def decimal_digits(bits: int) -> int:
    """ significant decimal digits carried by a binary precision """
    return max(1, int(bits * math.log10(2)))


def to_decimal(value: Union[mpf, float, int, Fraction], bits: int = 64) -> str:
    """ serialize as a decimal string; parsing it back at `bits` gives the same value """
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return '%d/%d' % (value.numerator, value.denominator)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    with mpmath.workprec(bits):
        return mpmath.nstr(value, decimal_digits(bits) + 2, strip_zeros=True, min_fixed=-6, max_fixed=12)


def from_decimal(text: str, bits: int) -> mpf:
    with mpmath.workprec(bits):
        return mpf(text)


def det_start_bits(t: float, size: int, prec_bits: int = DEFAULT_BITS) -> int:
    """ entries grow like e^{2t} and cancel down to probabilities in [0, 1] """
    return max(prec_bits, int(8 * t + 16 * size), DEFAULT_BITS)


class Certificate:
    """ Outcome of a precision-doubling comparison """

    def __init__(self, bits: int, rel_diff: mpf, tolerance_bits: int):
        super().__init__()
        self.__bits = bits
        self.__rel_diff = rel_diff
        self.__tolerance_bits = tolerance_bits

    @property
    def bits(self) -> int:
        """ precision of the reported value """
        return self.__bits

    @property
    def rel_diff(self) -> mpf:
        return self.__rel_diff

    @property
    def tolerance_bits(self) -> int:
        return self.__tolerance_bits

    @property
    def passed(self) -> bool:
        return self.__rel_diff <= mpmath.ldexp(1, -self.__tolerance_bits)

    def to_dict(self) -> dict:
        return {
            'bits': self.bits,
            'rel_diff': to_decimal(self.rel_diff, bits=53),
            'tolerance_bits': self.tolerance_bits,
            'passed': self.passed,
        }

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s bits=%d rel_diff="%s" tolerance_bits=%d />' % (clazz, self.bits, mpmath.nstr(self.rel_diff, 3),
                                                                   self.tolerance_bits)


def certified(compute: Callable[[int], mpf], start_bits: int, tolerance_bits: int = TOLERANCE_BITS,
              ceiling_bits: int = CEILING_BITS, name: Optional[str] = None) -> (mpf, Certificate):
    """
    Evaluate at `start_bits`, then at doubled precision, until two successive
    results agree to `tolerance_bits` relative bits.

    :param compute:        value at a given working precision
    :param start_bits:     first precision tried
    :param tolerance_bits: required agreement
    :param ceiling_bits:   give up beyond this precision
    :param name:           label for log lines
    :return: value at the higher precision of the agreeing pair, certificate
    """
    bits = max(start_bits, tolerance_bits + GUARD_BITS)
    previous = compute(bits)
    while True:
        higher = bits * 2
        if higher > ceiling_bits:
            raise PrecisionError('%s: no agreement to %d bits below %d bits of precision'
                                 % (name or 'value', tolerance_bits, ceiling_bits), suggested_bits=higher)
        current = compute(higher)
        with mpmath.workprec(higher):
            scale = abs(current) if current != 0 else mpf(1)
            rel_diff = abs(current - previous) / scale
        cert = Certificate(bits=higher, rel_diff=rel_diff, tolerance_bits=tolerance_bits)
        if cert.passed:
            return current, cert
        Log.debug(msg='[DET] %s: %d bits not enough (%s), doubling' % (name or 'value', bits, cert))
        previous = current
        bits = higher


"""
    Determinants
    ~~~~~~~~~~~~

        T_n = det[h_{a-b}]_{a,b=0..n-1}
        H_j = det[h_{a-b} - h_{a+b}]_{a,b=1..j}

    LU with partial pivoting (mpmath.det) at a working precision that is
    doubled until two successive values agree: the entries are of size
    e^{2t} while the normalised determinants are probabilities.
"""

from typing import Callable, List, Tuple

import mpmath
from mpmath import mpf

from ..utils import Log
from ..common import ValidationError
from ..common import Certificate, certified, det_start_bits
from ..common import TOLERANCE_BITS, CEILING_BITS
from ..moments import MomentSequence, DISCRETE, CONTINUOUS


def _rebuild(h: MomentSequence, bits: int, lmax: int) -> MomentSequence:
    """ the same weight at another precision """
    if h.is_discrete:
        return MomentSequence.discrete(m=h.m, t=h.t, prec_bits=bits, lmax=lmax)
    return MomentSequence.continuous(t=h.t, lmax=lmax, prec_bits=bits)


def toeplitz_matrix(h: MomentSequence, n: int) -> List[List[mpf]]:
    return [[h[a - b] for b in range(n)] for a in range(n)]


def toeplitz_hankel_matrix(h: MomentSequence, j: int) -> List[List[mpf]]:
    return [[h[a - b] - h[a + b] for b in range(1, j + 1)] for a in range(1, j + 1)]


def sine_kernel_matrix(m: int, t, j: int) -> List[List[mpf]]:
    """ (2/m) sum_{r=1}^{m-1} sin(pi r a/m) sin(pi r b/m) e^{2t cos(pi r/m)}, built without moments """
    tt = mpf(t)
    weights = [mpmath.exp(2 * tt * mpmath.cospi(mpf(r) / m)) for r in range(m)]
    sines = [[mpmath.sinpi(mpf(r * a) / m) for r in range(m)] for a in range(j + 1)]
    matrix = []
    for a in range(1, j + 1):
        row = []
        for b in range(1, j + 1):
            total = mpf(0)
            for r in range(1, m):
                total += sines[a][r] * sines[b][r] * weights[r]
            row.append(2 * total / m)
        matrix.append(row)
    return matrix


def lu_det(matrix: List[List[mpf]]) -> mpf:
    """ determinant at the current working precision """
    size = len(matrix)
    if size == 0:
        return mpf(1)
    if size == 1:
        return +matrix[0][0]
    return mpmath.det(mpmath.matrix(matrix))


def _check_kind(h: MomentSequence, size: int, hankel: bool):
    if size < 0:
        raise ValidationError('determinant size must be >= 0: %d' % size)
    if hankel and h.is_discrete and size > h.m - 1:
        raise ValidationError('discrete Toeplitz-Hankel determinant needs j <= m-1 (j=%d, m=%d)' % (size, h.m))


def _certify(compute: Callable[[int], mpf], t, size: int, prec_bits: int, tolerance_bits: int,
             ceiling_bits: int, name: str) -> Tuple[mpf, Certificate]:
    start = det_start_bits(t=float(mpf(t)), size=size, prec_bits=prec_bits)
    value, cert = certified(compute=compute, start_bits=start, tolerance_bits=tolerance_bits,
                            ceiling_bits=ceiling_bits, name=name)
    Log.debug(msg='[DET] %s = %s %s' % (name, mpmath.nstr(value, 15), cert))
    return value, cert


def toeplitz_det_certified(h: MomentSequence, n: int, tolerance_bits: int = TOLERANCE_BITS,
                           ceiling_bits: int = CEILING_BITS) -> Tuple[mpf, Certificate]:
    _check_kind(h=h, size=n, hankel=False)
    if n == 0:
        return mpf(1), Certificate(bits=h.prec_bits, rel_diff=mpf(0), tolerance_bits=tolerance_bits)

    def compute(bits: int) -> mpf:
        moments = _rebuild(h=h, bits=bits, lmax=n)
        with mpmath.workprec(bits):
            return lu_det(toeplitz_matrix(h=moments, n=n))
    name = 'T_%d(%s, t=%s)' % (n, h.kind, h.t)
    return _certify(compute=compute, t=h.t, size=n, prec_bits=h.prec_bits, tolerance_bits=tolerance_bits,
                    ceiling_bits=ceiling_bits, name=name)


def toeplitz_hankel_det_certified(h: MomentSequence, j: int, tolerance_bits: int = TOLERANCE_BITS,
                                  ceiling_bits: int = CEILING_BITS) -> Tuple[mpf, Certificate]:
    _check_kind(h=h, size=j, hankel=True)
    if j == 0:
        return mpf(1), Certificate(bits=h.prec_bits, rel_diff=mpf(0), tolerance_bits=tolerance_bits)

    def compute(bits: int) -> mpf:
        moments = _rebuild(h=h, bits=bits, lmax=2 * j)
        with mpmath.workprec(bits):
            return lu_det(toeplitz_hankel_matrix(h=moments, j=j))
    name = 'H_%d(%s, t=%s)' % (j, h.kind, h.t)
    return _certify(compute=compute, t=h.t, size=j, prec_bits=h.prec_bits, tolerance_bits=tolerance_bits,
                    ceiling_bits=ceiling_bits, name=name)


def sine_kernel_det_certified(m: int, t, j: int, prec_bits: int = 256, tolerance_bits: int = TOLERANCE_BITS,
                              ceiling_bits: int = CEILING_BITS) -> Tuple[mpf, Certificate]:
    if j > m - 1:
        raise ValidationError('sine kernel determinant needs j <= m-1 (j=%d, m=%d)' % (j, m))
    if j == 0:
        return mpf(1), Certificate(bits=prec_bits, rel_diff=mpf(0), tolerance_bits=tolerance_bits)

    def compute(bits: int) -> mpf:
        with mpmath.workprec(bits):
            return lu_det(sine_kernel_matrix(m=m, t=t, j=j))
    return _certify(compute=compute, t=t, size=j, prec_bits=prec_bits, tolerance_bits=tolerance_bits,
                    ceiling_bits=ceiling_bits, name='S_%d(m=%d, t=%s)' % (j, m, t))


def toeplitz_det(h: MomentSequence, n: int) -> mpf:
    value, _ = toeplitz_det_certified(h=h, n=n)
    return value


def toeplitz_hankel_det(h: MomentSequence, j: int) -> mpf:
    value, _ = toeplitz_hankel_det_certified(h=h, j=j)
    return value


def sine_kernel_det(m: int, t, j: int, prec_bits: int = 256) -> mpf:
    value, _ = sine_kernel_det_certified(m=m, t=t, j=j, prec_bits=prec_bits)
    return value


def moments_for(kind: str, t, size: int, prec_bits: int, m: int = None) -> MomentSequence:
    """ moment sequence large enough for determinants of the given size """
    if kind == DISCRETE:
        return MomentSequence.discrete(m=m, t=t, prec_bits=prec_bits, lmax=2 * size)
    elif kind == CONTINUOUS:
        return MomentSequence.continuous(t=t, lmax=2 * size, prec_bits=prec_bits)
    raise ValidationError('unknown moment kind: %s' % kind)

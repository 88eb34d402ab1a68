
"""
    Orthogonal Polynomials on the Unit Circle
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    Monic pi_n orthogonal for <p, q> = \\oint p(z) q(1/z) d mu, with real
    coefficients since the weight is real and even. Szego recurrence:

        pi_{n+1}(z) = z pi_n(z) + pi_{n+1}(0) pi*_n(z),   pi*_n(z) = z^n pi_n(1/z)
        pi_{n+1}(0) = -<z pi_n, 1> / N_n
        N_{n+1}     = N_n (1 - pi_{n+1}(0)^2),            N_n = <pi_n, z^n>
"""

from typing import List, Tuple

import mpmath
from mpmath import mpf

from ..utils import Logging
from ..common import SingularityError, ValidationError
from ..common import det_start_bits, DEFAULT_BITS
from ..moments import MomentSequence, DISCRETE, CONTINUOUS


class OpucSequence:
    """ Verblunsky data pi_n(0) and norms N_n for n = 0..nmax """

    def __init__(self, kind: str, t, nmax: int, pi0: Tuple[mpf, ...], norms: Tuple[mpf, ...],
                 inner_norms: Tuple[mpf, ...], prec_bits: int, m: int = None):
        super().__init__()
        self.__kind = kind
        self.__t = t
        self.__nmax = nmax
        self.__pi0 = pi0
        self.__norms = norms
        self.__inner = inner_norms
        self.__prec_bits = prec_bits
        self.__m = m

    @property
    def kind(self) -> str:
        return self.__kind

    @property
    def t(self):
        return self.__t

    @property
    def m(self) -> int:
        return self.__m

    @property
    def nmax(self) -> int:
        return self.__nmax

    @property
    def prec_bits(self) -> int:
        return self.__prec_bits

    @property
    def pi0(self) -> Tuple[mpf, ...]:
        """ pi_n(0) for n = 0..nmax, pi_0(0) = 1 """
        return self.__pi0

    @property
    def norms(self) -> Tuple[mpf, ...]:
        """ N_n by the norm recurrence """
        return self.__norms

    @property
    def inner_norms(self) -> Tuple[mpf, ...]:
        """ N_n = <pi_n, z^n> evaluated directly from the moments """
        return self.__inner

    def pi(self, n: int) -> mpf:
        if n < 0 or n > self.__nmax:
            raise ValidationError('pi_%d(0) outside 0..%d' % (n, self.__nmax))
        return self.__pi0[n]

    def norm(self, n: int) -> mpf:
        if n < 0 or n > self.__nmax:
            raise ValidationError('N_%d outside 0..%d' % (n, self.__nmax))
        return self.__norms[n]

    def toeplitz_product(self, j: int) -> mpf:
        """ T_j = prod_{n<j} N_n """
        with mpmath.workprec(self.__prec_bits):
            return mpmath.fprod(self.norm(n) for n in range(j))

    def hankel_product(self, j: int) -> mpf:
        """ H_j = prod_{n=1..j} N_{2n} / (1 - pi_{2n}(0)) """
        with mpmath.workprec(self.__prec_bits):
            return mpmath.fprod(self.norm(2 * n) / (1 - self.pi(2 * n)) for n in range(1, j + 1))

    def flow_q(self, l: int) -> mpf:
        """ -(pi_{l-1} pi_{l+1} + pi_l^2) + pi_{l-1} pi_{l+1} pi_l^2 """
        with mpmath.workprec(self.__prec_bits):
            a = self.pi(l - 1)
            b = self.pi(l)
            c = self.pi(l + 1)
            return -(a * c + b * b) + a * c * b * b

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s kind=%s t=%s nmax=%d bits=%d />' % (clazz, self.kind, self.t, self.nmax, self.prec_bits)


class Levinson(Logging):

    LOG_TAG = '[OPUC]'

    def run(self, h: MomentSequence, nmax: int) -> OpucSequence:
        if nmax < 0:
            raise ValidationError('nmax must be >= 0: %d' % nmax)
        if h.is_discrete and nmax > 2 * h.m - 1:
            raise SingularityError('discrete weight with %d atoms supports nmax <= %d, asked %d'
                                   % (2 * h.m, 2 * h.m - 1, nmax))
        with mpmath.workprec(h.prec_bits):
            coeffs: List[mpf] = [mpf(1)]
            norm = +h[0]
            if norm <= 0:
                raise SingularityError('h_0 = %s is not positive' % norm)
            pi0 = [mpf(1)]
            norms = [norm]
            inner = [norm]
            for n in range(nmax):
                # <z pi_n, 1> = sum_k c_k h_{k+1}
                moment = mpmath.fsum(coeffs[k] * h[k + 1] for k in range(n + 1))
                alpha = -moment / norm
                if abs(alpha) >= 1:
                    raise SingularityError('|pi_%d(0)| = %s >= 1 at t=%s' % (n + 1, mpmath.nstr(abs(alpha), 8), h.t))
                # z pi_n + alpha pi*_n, coefficients low to high
                shifted = [mpf(0)] + coeffs
                for k in range(n + 1):
                    shifted[k] += alpha * coeffs[n - k]
                coeffs = shifted
                norm = norm * (1 - alpha * alpha)
                if norm <= 0:
                    raise SingularityError('N_%d = %s is not positive' % (n + 1, norm))
                pi0.append(alpha)
                norms.append(norm)
                inner.append(mpmath.fsum(coeffs[k] * h[n + 1 - k] for k in range(n + 2)))
        self.debug(msg='%s: pi_1(0) = %s' % (h, mpmath.nstr(pi0[1], 12) if nmax > 0 else '-'))
        return OpucSequence(kind=h.kind, t=h.t, nmax=nmax, pi0=tuple(pi0), norms=tuple(norms),
                            inner_norms=tuple(inner), prec_bits=h.prec_bits, m=h.m)


def levinson_opuc(h: MomentSequence, nmax: int) -> OpucSequence:
    return Levinson().run(h=h, nmax=nmax)


def opuc_at(kind: str, t, nmax: int, m: int = None, prec_bits: int = DEFAULT_BITS) -> OpucSequence:
    """ Levinson run with moments at a precision suited to (t, nmax) """
    bits = det_start_bits(t=float(mpf(t)), size=nmax, prec_bits=prec_bits)
    if kind == DISCRETE:
        if m is None:
            raise ValidationError('discrete weight needs m')
        h = MomentSequence.discrete(m=m, t=t, prec_bits=bits, lmax=nmax + 1)
    elif kind == CONTINUOUS:
        h = MomentSequence.continuous(t=t, lmax=nmax + 1, prec_bits=bits)
    else:
        raise ValidationError('unknown moment kind: %s' % kind)
    return levinson_opuc(h=h, nmax=nmax)

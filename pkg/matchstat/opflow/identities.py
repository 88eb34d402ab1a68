
"""
    Flow Identities
    ~~~~~~~~~~~~~~~

    Numerical checks of the differential identities satisfied by the OPUC
    data of the weights e^{t(z + 1/z)}, with t-derivatives taken by finite
    differences at step h and h/2 (second-order schemes, so the residual
    should shrink by about 4):

        pi_n'       = (pi_{n+1} - pi_{n-1}) (1 - pi_n^2)
        (log N_n)'  = -2 pi_{n+1} pi_n
        (log H_j)'  = pi_{2j+1} + (1/2) (log T_{2j+1})'
        (1/2) (log e^{-t^2} T_l)'' = Q_l

    plus algebraic ones with no step: N_n from the recurrence against
    <pi_n, z^n> from the moments, and the products of norms against the
    determinants T_j and H_j.
"""

from typing import Callable, Dict, List, Optional

import mpmath
from mpmath import mpf

from ..utils import Logging
from ..common import ValidationError
from ..common import DEFAULT_BITS
from ..moments import DISCRETE
from ..detkernel import OpucSequence, opuc_at
from ..detkernel import toeplitz_det, toeplitz_hankel_det, moments_for


RESIDUAL_LIMIT = 1e-6
NEGLIGIBLE = 1e-15


class IdentityCheck:

    def __init__(self, name: str, residual: float, residual_half: Optional[float] = None):
        super().__init__()
        self.name = name
        self.residual = residual
        self.residual_half = residual_half

    @property
    def ratio(self) -> Optional[float]:
        if self.residual_half is None or self.residual_half == 0:
            return None
        return self.residual / self.residual_half

    @property
    def passed(self) -> bool:
        if self.residual_half is None:
            return self.residual < RESIDUAL_LIMIT
        if self.residual >= RESIDUAL_LIMIT:
            return False
        if self.residual < NEGLIGIBLE:
            return True
        ratio = self.ratio
        return ratio is not None and 2.5 <= ratio <= 5.5

    def to_dict(self) -> dict:
        info = {'name': self.name, 'residual': self.residual, 'passed': self.passed}
        if self.residual_half is not None:
            info['residual_half_step'] = self.residual_half
            info['ratio'] = self.ratio
        return info

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s name="%s" residual=%.3e ratio=%s passed=%s />' % (clazz, self.name, self.residual,
                                                                     self.ratio, self.passed)


class IdentityReport:

    def __init__(self, kind: str, t, nmax: int, step: float, checks: List[IdentityCheck], m: int = None):
        super().__init__()
        self.kind = kind
        self.t = t
        self.m = m
        self.nmax = nmax
        self.step = step
        self.checks = checks

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> Optional[IdentityCheck]:
        for item in self.checks:
            if item.name == name:
                return item

    def to_dict(self) -> dict:
        return {
            'kind': self.kind, 't': self.t, 'm': self.m, 'nmax': self.nmax, 'step': self.step,
            'passed': self.passed,
            'checks': [item.to_dict() for item in self.checks],
        }


class _Stencil:
    """ OPUC data at t + offset * h, central when t allows and forward near t = 0 """

    CENTRAL = (-1, 0, 1)
    FORWARD = (0, 1, 2, 3)

    def __init__(self, kind: str, t: mpf, h: mpf, nmax: int, m: Optional[int], prec_bits: int):
        super().__init__()
        self.h = h
        self.central = t - h >= 0
        offsets = self.CENTRAL if self.central else self.FORWARD
        self.points: Dict[int, OpucSequence] = {
            offset: opuc_at(kind=kind, t=t + offset * h, nmax=nmax, m=m, prec_bits=prec_bits)
            for offset in offsets
        }

    def first(self, f: Callable[[OpucSequence], mpf]) -> mpf:
        p = self.points
        if self.central:
            return (f(p[1]) - f(p[-1])) / (2 * self.h)
        return (-3 * f(p[0]) + 4 * f(p[1]) - f(p[2])) / (2 * self.h)

    def second(self, f: Callable[[OpucSequence], mpf]) -> mpf:
        p = self.points
        if self.central:
            return (f(p[1]) - 2 * f(p[0]) + f(p[-1])) / (self.h * self.h)
        return (2 * f(p[0]) - 5 * f(p[1]) + 4 * f(p[2]) - f(p[3])) / (self.h * self.h)

    @property
    def here(self) -> OpucSequence:
        return self.points[0]


def _max_abs(values) -> float:
    return max((abs(float(v)) for v in values), default=0.0)


def _differential_residuals(stencil: _Stencil, nmax: int) -> Dict[str, float]:
    here = stencil.here
    results = {}
    # pi_n' for n = 1..nmax-1
    results['pi_derivative'] = _max_abs(
        stencil.first(lambda s: s.pi(n)) - (here.pi(n + 1) - here.pi(n - 1)) * (1 - here.pi(n) ** 2)
        for n in range(1, nmax)
    )
    results['norm_derivative'] = _max_abs(
        stencil.first(lambda s: mpmath.log(s.norm(n))) + 2 * here.pi(n + 1) * here.pi(n)
        for n in range(nmax)
    )
    results['hankel_derivative'] = _max_abs(
        stencil.first(lambda s: mpmath.log(s.hankel_product(j)))
        - here.pi(2 * j + 1) - stencil.first(lambda s: mpmath.log(s.toeplitz_product(2 * j + 1))) / 2
        for j in range(1, (nmax - 1) // 2 + 1)
    )
    # (1/2)(log e^{-t^2} T_l)'' = (1/2)(log T_l)'' - 1
    results['toeplitz_second_derivative'] = _max_abs(
        stencil.second(lambda s: mpmath.log(s.toeplitz_product(l))) / 2 - 1 - here.flow_q(l)
        for l in range(1, nmax)
    )
    return results


class IdentityChecker(Logging):

    LOG_TAG = '[OPUC]'

    def __init__(self, prec_bits: int = DEFAULT_BITS):
        super().__init__()
        self.__prec_bits = prec_bits

    def differential(self, kind: str, t, nmax: int, step: float = 1e-4, m: int = None) -> IdentityReport:
        if nmax < 2:
            raise ValidationError('identity checks need nmax >= 2: %d' % nmax)
        if kind == DISCRETE and (m is None or nmax + 1 > 2 * m - 1):
            raise ValidationError('discrete identities need m with nmax + 1 <= 2m - 1 (nmax=%d, m=%s)' % (nmax, m))
        bits = self.__prec_bits
        with mpmath.workprec(bits):
            tt = mpf(t)
            h = mpf(step)
            coarse = _differential_residuals(_Stencil(kind=kind, t=tt, h=h, nmax=nmax + 1, m=m, prec_bits=bits),
                                             nmax=nmax)
            fine = _differential_residuals(_Stencil(kind=kind, t=tt, h=h / 2, nmax=nmax + 1, m=m, prec_bits=bits),
                                           nmax=nmax)
            checks = [IdentityCheck(name=name, residual=coarse[name], residual_half=fine[name]) for name in coarse]
            here = opuc_at(kind=kind, t=tt, nmax=nmax, m=m, prec_bits=bits)
            checks.append(IdentityCheck(name='inner_norms', residual=_max_abs(
                here.inner_norms[n] / here.norms[n] - 1 for n in range(nmax + 1)
            )))
        report = IdentityReport(kind=kind, t=t, nmax=nmax, step=step, checks=checks, m=m)
        self.info(msg='%s t=%s nmax=%d passed=%s' % (kind, t, nmax, report.passed))
        return report

    def products(self, kind: str, t, jmax: int, m: int = None) -> IdentityReport:
        """ T_j and H_j from the norms against the determinants, j = 1..jmax """
        if kind == DISCRETE and (m is None or jmax > m - 1):
            raise ValidationError('discrete products need jmax <= m - 1 (jmax=%d, m=%s)' % (jmax, m))
        nmax = 2 * jmax
        opuc = opuc_at(kind=kind, t=t, nmax=nmax, m=m, prec_bits=self.__prec_bits)
        h = moments_for(kind=kind, t=t, size=nmax, prec_bits=opuc.prec_bits, m=m)
        toeplitz = []
        hankel = []
        for j in range(1, jmax + 1):
            with mpmath.workprec(opuc.prec_bits):
                toeplitz.append(opuc.toeplitz_product(j) / toeplitz_det(h=h, n=j) - 1)
                hankel.append(opuc.hankel_product(j) / toeplitz_hankel_det(h=h, j=j) - 1)
        checks = [
            IdentityCheck(name='toeplitz_product', residual=_max_abs(toeplitz)),
            IdentityCheck(name='hankel_product', residual=_max_abs(hankel)),
        ]
        return IdentityReport(kind=kind, t=t, nmax=nmax, step=0.0, checks=checks, m=m)


def ode_identity_checks(t, nmax: int, kind: str, step: float = 1e-4, m: int = None,
                        prec_bits: int = DEFAULT_BITS) -> IdentityReport:
    return IdentityChecker(prec_bits=prec_bits).differential(kind=kind, t=t, nmax=nmax, step=step, m=m)


def product_identity_checks(t, jmax: int, kind: str, m: int = None, prec_bits: int = DEFAULT_BITS) -> IdentityReport:
    return IdentityChecker(prec_bits=prec_bits).products(kind=kind, t=t, jmax=jmax, m=m)

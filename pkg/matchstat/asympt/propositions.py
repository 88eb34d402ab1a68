
"""
    Painleve Regime of the Verblunsky Data
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    With gamma = n/2t, gamma~ = (2m - n)/2t and s = t^{2/3} a(gamma):

        pi_{n,m}(0) ~ pi_{n,oo}(0) - (-1)^n pi_{2m-n,oo}(0) + (g1 - (-1)^n g2)(s, s~) / t
        (-1)^n pi_{n,oo}(0) ~ t^{-1/3} q(s) (1 - (gamma - 1)/30) + h(s) / t

    and pi_{n,oo}(0) is exponentially small once n exceeds 2t by a fixed
    fraction.
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from ..common import ValidationError
from ..common import DEFAULT_BITS
from ..moments import DISCRETE, CONTINUOUS
from ..detkernel import opuc_at
from ..painleve import HMSolution, solve_hm, g1g2h

from .scaling import s_of_gamma, cube_root


def _solution(solution: Optional[HMSolution]) -> HMSolution:
    return solve_hm() if solution is None else solution


def prop62_prediction(t: float, n: int, m: int, solution: Optional[HMSolution] = None,
                      prec_bits: int = DEFAULT_BITS) -> Tuple[float, float]:
    """ (pi_{n,m}(0; t), its Painleve-regime approximation) """
    if t <= 0 or n < 1 or m < 1:
        raise ValidationError('need t > 0, n >= 1, m >= 1: %s, %d, %d' % (t, n, m))
    if n > 2 * m - 1:
        raise ValidationError('discrete OPUC needs n <= 2m - 1 (n=%d, m=%d)' % (n, m))
    solution = _solution(solution)
    dual = 2 * m - n
    discrete = opuc_at(kind=DISCRETE, t=t, nmax=n, m=m, prec_bits=prec_bits)
    continuous = opuc_at(kind=CONTINUOUS, t=t, nmax=max(n, dual), prec_bits=prec_bits)
    y = s_of_gamma(t, n / (2 * t))
    y_tilde = s_of_gamma(t, dual / (2 * t))
    g1, g2, _ = g1g2h(solution=solution, y=y, y_tilde=y_tilde)
    sign = -1 if n % 2 else 1
    predicted = float(continuous.pi(n)) - sign * float(continuous.pi(dual)) + float(g1 - sign * g2) / t
    return float(discrete.pi(n)), predicted


def prop62_check(t: float, n: int, m: int, solution: Optional[HMSolution] = None,
                 prec_bits: int = DEFAULT_BITS) -> float:
    value, predicted = prop62_prediction(t=t, n=n, m=m, solution=solution, prec_bits=prec_bits)
    return abs(value - predicted)


def prop63_prediction(t: float, n: int, solution: Optional[HMSolution] = None,
                      prec_bits: int = DEFAULT_BITS) -> Tuple[float, float]:
    """ ((-1)^n pi_{n,oo}(0; t), its Painleve-regime approximation) """
    if t <= 0 or n < 1:
        raise ValidationError('need t > 0 and n >= 1: %s, %d' % (t, n))
    solution = _solution(solution)
    continuous = opuc_at(kind=CONTINUOUS, t=t, nmax=n, prec_bits=prec_bits)
    gamma = n / (2 * t)
    s = s_of_gamma(t, gamma)
    _, _, h = g1g2h(solution=solution, y=s, y_tilde=s)
    q = solution.q_at(s)
    sign = -1 if n % 2 else 1
    predicted = float(q) * (1 - (gamma - 1) / 30) / cube_root(t) + float(h) / t
    return sign * float(continuous.pi(n)), predicted


def prop63_check(t: float, n: int, solution: Optional[HMSolution] = None, prec_bits: int = DEFAULT_BITS) -> float:
    value, predicted = prop63_prediction(t=t, n=n, solution=solution, prec_bits=prec_bits)
    return abs(value - predicted)


def exponential_regime_value(t: float, factor: float = 1.5, prec_bits: int = DEFAULT_BITS) -> float:
    """ |pi_{n,oo}(0; t)| at n = [2 factor t] """
    n = int(math.floor(2 * factor * t))
    continuous = opuc_at(kind=CONTINUOUS, t=t, nmax=n, prec_bits=prec_bits)
    return abs(float(continuous.pi(n)))


def exponential_regime_fit(t: float, ns: List[int], m: Optional[int] = None,
                           prec_bits: int = DEFAULT_BITS) -> Tuple[float, List[Tuple[int, float]]]:
    """
    Fit log|pi_n(0)| ~ -c max(n, 2m - n) over the sampled n.

    :return: (c, [(n, |pi_n(0)|), ...])
    """
    if len(ns) < 2:
        raise ValidationError('exponential fit needs >= 2 indices')
    top = max(ns)
    if m is None:
        opuc = opuc_at(kind=CONTINUOUS, t=t, nmax=top, prec_bits=prec_bits)
    else:
        opuc = opuc_at(kind=DISCRETE, t=t, nmax=top, m=m, prec_bits=prec_bits)
    samples = [(n, abs(float(opuc.pi(n)))) for n in ns]
    scale = [n if m is None else max(n, 2 * m - n) for n in ns]
    logs = [math.log(value) if value > 0 else -745.0 for _, value in samples]
    slope, _ = np.polyfit(np.array(scale, dtype=float), np.array(logs), 1)
    return float(-slope), samples

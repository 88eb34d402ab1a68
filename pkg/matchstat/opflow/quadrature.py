
"""
    Flow Quadrature
    ~~~~~~~~~~~~~~~

    Second route to the distribution functions, integrating the OPUC flow
    from 0 to t instead of evaluating a determinant:

        log P{Cro_t <= k, Nes_t <= j}
            = int_0^t pi_{2j+1}(0; tau) d tau + int_0^t (t - tau) Q_{2j+1}(tau) d tau

        log P{L_t <= l} = 2 int_0^t (t - tau) Q_l(tau) d tau

    where Q_l = -(pi_{l-1} pi_{l+1} + pi_l^2) + pi_{l-1} pi_{l+1} pi_l^2.
    Composite Gauss-Legendre on unit panels, panel count doubled until two
    successive results agree.
"""

import math
from typing import List, Tuple

import numpy as np
import mpmath
from mpmath import mpf

from ..utils import Log, WorkerPool
from ..common import ValidationError, ConvergenceError
from ..common import DEFAULT_BITS
from ..moments import DISCRETE, CONTINUOUS
from ..detkernel import opuc_at


NODES_PER_UNIT = 64
TOLERANCE = 1e-8
MAX_DOUBLINGS = 4


def gauss_legendre_nodes(t: float, panels: int, order: int) -> Tuple[np.ndarray, np.ndarray]:
    """ nodes and weights of the composite rule on [0, t] """
    x, w = np.polynomial.legendre.leggauss(order)
    width = t / panels
    nodes = []
    weights = []
    for p in range(panels):
        left = p * width
        nodes.append(left + (x + 1) * width / 2)
        weights.append(w * width / 2)
    return np.concatenate(nodes), np.concatenate(weights)


def _flow_values(args: Tuple[str, float, int, int, int]) -> Tuple[mpf, mpf]:
    """ (pi_{l}(0), Q_l) at one node; module level for the worker pool """
    kind, tau, l, m, bits = args
    opuc = opuc_at(kind=kind, t=tau, nmax=l + 1, m=m, prec_bits=bits)
    return opuc.pi(l), opuc.flow_q(l)


def _integrate(kind: str, t: float, l: int, m: int, prec_bits: int, drift: bool,
               nodes_per_unit: int, tolerance: float, name: str) -> mpf:
    panels = max(1, int(math.ceil(t)))
    order = max(2, nodes_per_unit)
    previous = None
    for _ in range(MAX_DOUBLINGS + 1):
        nodes, weights = gauss_legendre_nodes(t=t, panels=panels, order=order)
        tasks = [(kind, float(tau), l, m, prec_bits) for tau in nodes]
        values: List[Tuple[mpf, mpf]] = WorkerPool.map(_flow_values, tasks)
        with mpmath.workprec(prec_bits):
            total = mpf(0)
            for tau, weight, (pi_l, q_l) in zip(nodes, weights, values):
                term = (mpf(t) - mpf(float(tau))) * q_l
                if drift:
                    term += pi_l
                total += mpf(float(weight)) * term
        if previous is not None:
            diff = abs(float(total - previous))
            Log.debug(msg='[OPUC] %s: %d panels, change %.3e' % (name, panels, diff))
            if diff <= tolerance:
                return total
        previous = total
        panels *= 2
    raise ConvergenceError('%s: quadrature did not settle to %g after %d doublings' % (name, tolerance, MAX_DOUBLINGS))


def prop1_quadrature(t, k: int, j: int, prec_bits: int = DEFAULT_BITS, nodes_per_unit: int = NODES_PER_UNIT,
                     tolerance: float = TOLERANCE) -> mpf:
    """ log P{Cro_t <= k, Nes_t <= j} by integrating the discrete flow (m = j + k + 1) """
    t = float(t)
    if t < 0 or k < 0 or j < 0:
        raise ValidationError('t, k, j must be >= 0: %s, %d, %d' % (t, k, j))
    if t == 0:
        return mpf(0)
    if k == 0:
        # only the empty matching: the flow would need pi_{2m}
        with mpmath.workprec(prec_bits):
            return -mpf(t) ** 2 / 2
    return _integrate(kind=DISCRETE, t=t, l=2 * j + 1, m=j + k + 1, prec_bits=prec_bits, drift=True,
                      nodes_per_unit=nodes_per_unit, tolerance=tolerance,
                      name='log P{cro<=%d, nes<=%d}(t=%s)' % (k, j, t))


def nes_quadrature(t, j: int, prec_bits: int = DEFAULT_BITS, nodes_per_unit: int = NODES_PER_UNIT,
                   tolerance: float = TOLERANCE) -> mpf:
    """ log P{Nes_t <= j}, the same flow for the continuous weight """
    t = float(t)
    if t < 0 or j < 0:
        raise ValidationError('t, j must be >= 0: %s, %d' % (t, j))
    if t == 0:
        return mpf(0)
    return _integrate(kind=CONTINUOUS, t=t, l=2 * j + 1, m=None, prec_bits=prec_bits, drift=True,
                      nodes_per_unit=nodes_per_unit, tolerance=tolerance,
                      name='log P{nes<=%d}(t=%s)' % (j, t))


def lt_quadrature(t, l: int, prec_bits: int = DEFAULT_BITS, nodes_per_unit: int = NODES_PER_UNIT,
                  tolerance: float = TOLERANCE) -> mpf:
    """ log P{L_t <= l} """
    t = float(t)
    if t < 0 or l < 0:
        raise ValidationError('t, l must be >= 0: %s, %d' % (t, l))
    if t == 0:
        return mpf(0)
    if l == 0:
        with mpmath.workprec(prec_bits):
            return -mpf(t) ** 2
    value = _integrate(kind=CONTINUOUS, t=t, l=l, m=None, prec_bits=prec_bits, drift=False,
                       nodes_per_unit=nodes_per_unit, tolerance=tolerance, name='log P{L<=%d}(t=%s)' % (l, t))
    with mpmath.workprec(prec_bits):
        return 2 * value

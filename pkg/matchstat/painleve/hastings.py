
"""
    Hastings-McLeod Solution
    ~~~~~~~~~~~~~~~~~~~~~~~~

        q'' = s q + 2 q^3,   q(s) ~ Ai(s) as s -> +oo,   q(s) ~ sqrt(-s/2) as s -> -oo

    solved as a two-point boundary value problem on [s_min, s_max] together
    with the running integrals needed by the distribution functions:

        u   = int_oo^s q^2        V   = int_oo^s q'^2
        I_q = int_oo^s q          I_u = int_oo^s u

    The right-hand boundary data come from the Airy tail, with closed-form
    antiderivatives for the integrals beyond s_max.
"""

from typing import Dict, Tuple

import numpy as np
from scipy.integrate import solve_bvp, cumulative_trapezoid, trapezoid
from scipy.interpolate import PPoly
from scipy.special import airy, itairy

from ..utils import Logging, SharedCacheManager
from ..common import ValidationError, RangeError, ConvergenceError, PrecisionError


S_MIN = -12.0
S_MAX = 10.0
NPOINTS = 8001
TOL = 1e-9

IDENTITY_LIMIT = 1e-8
MAX_NODES = 1000000


def left_boundary(s: float) -> float:
    """ three-term expansion of q at s -> -oo """
    s3 = s ** 3
    return np.sqrt(-s / 2) * (1 + 1 / (8 * s3) - 73 / (128 * s3 * s3))


def airy_tail(s: float) -> Dict[str, float]:
    """ boundary values at s from q = Ai on [s, oo) """
    ai, aip, _, _ = airy(s)
    ai2 = ai * ai
    aip2 = aip * aip
    int_q = 1.0 / 3 - itairy(s)[0]                            # int_s^oo Ai
    int_q2 = aip2 - s * ai2                                    # int_s^oo Ai^2
    int_qp2 = -(2 * ai * aip - s * s * ai2 + s * aip2) / 3     # int_s^oo Ai'^2
    int_u = (2 * s * s * ai2 - 2 * s * aip2 - ai * aip) / 3    # int_s^oo (x - s) Ai^2
    return {
        'q': ai, 'qp': aip,
        'u': -int_q2,
        'v': -int_qp2,
        'iq': -int_q,
        'iu': int_u,
    }


def _fun(s: np.ndarray, y: np.ndarray) -> np.ndarray:
    q, qp, u = y[0], y[1], y[2]
    return np.vstack((qp, s * q + 2 * q ** 3, q * q, qp * qp, q, u))


def _fun_jac(s: np.ndarray, y: np.ndarray) -> np.ndarray:
    q, qp = y[0], y[1]
    jac = np.zeros((6, 6, s.size))
    jac[0, 1] = 1
    jac[1, 0] = s + 6 * q * q
    jac[2, 0] = 2 * q
    jac[3, 1] = 2 * qp
    jac[4, 0] = 1
    jac[5, 2] = 1
    return jac


def _initial_guess(s: np.ndarray) -> np.ndarray:
    """ blend of sqrt(-s/2) and Ai(s), with integrals of the blend """
    ai, aip, _, _ = airy(s)
    w = 0.5 * (1 - np.tanh(2 * s))
    root = np.sqrt(np.maximum(-s, 0) / 2)
    q = w * root + (1 - w) * ai
    qp = np.gradient(q, s)
    y = np.zeros((6, s.size))
    y[0] = q
    y[1] = qp
    # integrate from the right end leftward: F(s) = -int_s^{s_max} f
    for row, f in ((2, q * q), (3, qp * qp), (4, q)):
        y[row] = cumulative_trapezoid(f, s, initial=0) - trapezoid(f, s)
    y[5] = cumulative_trapezoid(y[2], s, initial=0) - trapezoid(y[2], s)
    return y


class HMSolution:
    """
        Hastings-McLeod solution on a grid
        ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

        Arrays over the grid s: q, q', u, V, I_q, I_u, alpha, beta; values
        between grid points come from the collocation interpolant.
    """

    def __init__(self, s: np.ndarray, interpolant: PPoly, s_min: float, s_max: float, tol: float,
                 rms_residual: float):
        super().__init__()
        self.__s = s
        self.__interpolant = interpolant
        self.__s_min = s_min
        self.__s_max = s_max
        self.__tol = tol
        self.__rms_residual = rms_residual
        values = interpolant(s)
        self.q = values[0]
        self.qp = values[1]
        self.u = values[2]
        self.v = values[3]
        self.iq = values[4]
        self.iu = values[5]
        self.alpha, self.beta = alpha_beta(s=s, q=self.q, qp=self.qp, u=self.u, v=self.v, iq=self.iq, iu=self.iu)

    @property
    def s(self) -> np.ndarray:
        return self.__s

    @property
    def s_min(self) -> float:
        return self.__s_min

    @property
    def s_max(self) -> float:
        return self.__s_max

    @property
    def tol(self) -> float:
        return self.__tol

    @property
    def rms_residual(self) -> float:
        """ largest collocation residual reported by the solver """
        return self.__rms_residual

    def check_range(self, x, margin: float = 0.0):
        xa = np.asanyarray(x)
        if np.any(xa < self.__s_min + margin) or np.any(xa > self.__s_max - margin):
            raise RangeError('argument outside [%g, %g]' % (self.__s_min + margin, self.__s_max - margin))

    def values(self, x) -> Tuple[np.ndarray, ...]:
        """ (q, q', u, V, I_q, I_u) at x """
        self.check_range(x)
        return tuple(self.__interpolant(np.asanyarray(x, dtype=float)))

    def q_at(self, x):
        return self.values(x)[0]

    def u_at(self, x):
        return self.values(x)[2]

    def log_f_goe(self, x):
        """ log F(x) = (1/2)(I_q - I_u) """
        _, _, _, _, iq, iu = self.values(x)
        return 0.5 * (iq - iu)

    def log_f_gue(self, x):
        """ log F_GUE(x) = -I_u """
        return -self.values(x)[5]

    def alpha_beta_at(self, x) -> Tuple[np.ndarray, np.ndarray]:
        q, qp, u, v, iq, iu = self.values(x)
        return alpha_beta(s=np.asanyarray(x, dtype=float), q=q, qp=qp, u=u, v=v, iq=iq, iu=iu)

    def invariants(self) -> Dict[str, float]:
        """ residuals on the grid; the q^4 identity relative to the size of its terms """
        s, q, qp, u = self.s, self.q, self.qp, self.u
        ai = airy(self.__s_max)[0]
        return {
            'q_min': float(np.min(q)),
            'ode_residual': self.__rms_residual,
            'identity_q4': float(np.max(np.abs(q ** 4 - (u + qp * qp - s * q * q))
                                        / (1 + q ** 4 + np.abs(s) * q * q))),
            'u_max': float(np.max(u)),
            'u_decrease': float(max(0.0, -np.min(np.diff(u)))),
            'u_right': float(abs(u[-1])),
            'boundary_right': float(abs(q[-1] - ai)),
        }

    def passed(self) -> bool:
        inv = self.invariants()
        return (inv['q_min'] > 0 and inv['u_max'] <= 0 and inv['u_decrease'] < self.__tol
                and inv['identity_q4'] < IDENTITY_LIMIT and inv['boundary_right'] < IDENTITY_LIMIT)

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s s=[%g, %g] points=%d tol=%g />' % (clazz, self.s_min, self.s_max, self.s.size, self.tol)


def alpha_beta(s, q, qp, u, v, iq, iu) -> Tuple[np.ndarray, np.ndarray]:
    """
        alpha = q^2 u/2 - u^3/6 + log(F^2) - V
        beta  = q' u - q (s + q^2/2 + u^2/2)

    with log(F^2) = I_q - I_u, so that alpha' = q beta + q.
    """
    alpha = q * q * u / 2 - u ** 3 / 6 + (iq - iu) - v
    beta = qp * u - q * (s + q * q / 2 + u * u / 2)
    return alpha, beta


class HastingsMcLeod(Logging):

    LOG_TAG = '[HM]'

    # collocation tolerance tightened this many times before giving up
    REFINEMENTS = 3

    def __init__(self, s_min: float = S_MIN, s_max: float = S_MAX, npoints: int = NPOINTS, tol: float = TOL):
        super().__init__()
        if not (s_min < -5 < 5 < s_max):
            raise ValidationError('grid must satisfy s_min < -5 < 5 < s_max: [%g, %g]' % (s_min, s_max))
        if npoints < 2000:
            raise ValidationError('npoints must be >= 2000: %d' % npoints)
        self.s_min = float(s_min)
        self.s_max = float(s_max)
        self.npoints = int(npoints)
        self.tol = float(tol)
        self.__left = left_boundary(self.s_min)
        self.__tail = airy_tail(self.s_max)

    def _bc(self, ya: np.ndarray, yb: np.ndarray) -> np.ndarray:
        tail = self.__tail
        return np.array([
            ya[0] - self.__left,
            yb[0] - tail['q'],
            yb[2] - tail['u'],
            yb[3] - tail['v'],
            yb[4] - tail['iq'],
            yb[5] - tail['iu'],
        ])

    def solve(self) -> HMSolution:
        mesh = np.linspace(self.s_min, self.s_max, min(self.npoints, 2001))
        guess = _initial_guess(mesh)
        tol = self.tol
        grid = np.linspace(self.s_min, self.s_max, self.npoints)
        for attempt in range(self.REFINEMENTS):
            res = solve_bvp(_fun, self._bc, mesh, guess, fun_jac=_fun_jac, tol=tol, max_nodes=MAX_NODES)
            if res.status != 0:
                raise ConvergenceError('HM boundary value problem: %s (try a denser grid)' % res.message)
            solution = HMSolution(s=grid, interpolant=res.sol, s_min=self.s_min, s_max=self.s_max, tol=tol,
                                  rms_residual=float(np.max(res.rms_residuals)))
            inv = solution.invariants()
            self.info(msg='attempt %d: tol=%g nodes=%d q4=%.3e' % (attempt, tol, res.x.size, inv['identity_q4']))
            if solution.passed():
                return solution
            # restart from the converged mesh with a tighter tolerance
            mesh = res.x
            guess = res.y
            tol /= 10
        raise PrecisionError('HM invariants not met down to tol=%g' % (tol * 10))


def solve_hm(s_min: float = S_MIN, s_max: float = S_MAX, npoints: int = NPOINTS, tol: float = TOL) -> HMSolution:
    """ solution shared through the memory cache, keyed by every grid parameter """
    def create():
        return HastingsMcLeod(s_min=s_min, s_max=s_max, npoints=npoints, tol=tol).solve()
    man = SharedCacheManager()
    return man.fetch(name='painleve', key=(float(s_min), float(s_max), int(npoints), float(tol)), creator=create)

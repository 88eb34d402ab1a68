
"""
    Correction Functions
    ~~~~~~~~~~~~~~~~~~~~

    Painleve expressions appearing in the first finite-t corrections of the
    matching statistics, and the identities tying them to F.
"""

from typing import Dict, Tuple

import numpy as np
from scipy.integrate import quad

from .hastings import HMSolution
from .tracy import TWDistribution, GOE, GUE


def g1g2h(solution: HMSolution, y, y_tilde) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
        g1 = (u'(y) q(y~) + u(y) q'(y~)) / 2
        g2 = (q(y) u'(y~) + q'(y) u(y~)) / 2
        h  = u(y) q'(y)/5 - q(y)^3/5 - y q(y)/20

    with u' = q^2
    """
    q, qp, u, _, _, _ = solution.values(y)
    qt, qpt, ut, _, _, _ = solution.values(y_tilde)
    g1 = (q * q * qt + u * qpt) / 2
    g2 = (q * qt * qt + qp * ut) / 2
    h = u * qp / 5 - q ** 3 / 5 - np.asanyarray(y, dtype=float) * q / 20
    return g1, g2, h


def g_integral_check(solution: HMSolution, x: float, x_prime: float) -> Dict[str, float]:
    """ int_0^oo (g1 + g2)(x + eta, x' + eta) d eta against -(u(x) q(x') + q(x) u(x'))/2 """
    upper = solution.s_max - max(x, x_prime)

    def integrand(eta: float) -> float:
        g1, g2, _ = g1g2h(solution=solution, y=x + eta, y_tilde=x_prime + eta)
        return float(g1 + g2)
    value, _ = quad(integrand, 0, upper, limit=400, epsabs=1e-12, epsrel=1e-12)
    q, _, u, _, _, _ = solution.values(x)
    qt, _, ut, _, _, _ = solution.values(x_prime)
    expected = -float(u * qt + q * ut) / 2
    return {'integral': value, 'expected': expected, 'residual': abs(value - expected)}


def goe_correction_e(solution: HMSolution, x):
    """ E = [-(u - q)^2 + 2(q^2 - q') + x^2 (u - q)/6] / 20 """
    q, qp, u, _, _, _ = solution.values(x)
    xa = np.asanyarray(x, dtype=float)
    d = u - q
    return (-d * d + 2 * (q * q - qp) + xa * xa * d / 6) / 20


def gue_correction(solution: HMSolution, x):
    """ u^2 - q^2 - x^2 u/6 """
    q, _, u, _, _, _ = solution.values(x)
    xa = np.asanyarray(x, dtype=float)
    return u * u - q * q - xa * xa * u / 6


def goe_identity_residual(solution: HMSolution, xs) -> float:
    """ max |20 E F + 4 F'' + x^2 F'/3| """
    tw = TWDistribution(which=GOE, solution=solution)
    xa = np.asanyarray(xs, dtype=float)
    lhs = 20 * goe_correction_e(solution, xa) * tw.cdf(xa)
    rhs = -4 * tw.pdf_prime(xa) - xa * xa * tw.pdf(xa) / 3
    return float(np.max(np.abs(lhs - rhs)))


def gue_identity_residual(solution: HMSolution, xs) -> float:
    """ max |(u^2 - q^2 - x^2 u/6) F_GUE - F_GUE'' - x^2 F_GUE'/6| """
    tw = TWDistribution(which=GUE, solution=solution)
    xa = np.asanyarray(xs, dtype=float)
    lhs = gue_correction(solution, xa) * tw.cdf(xa)
    rhs = tw.pdf_prime(xa) + xa * xa * tw.pdf(xa) / 6
    return float(np.max(np.abs(lhs - rhs)))


def perfect_derivative_check(solution: HMSolution, x_t: float, etas, step: float = 1e-3) -> Dict[str, float]:
    """
    The expanded forms

        U1 = (1/5) [u q' - q^3 + (eta/2 - 5 x_t/6) q + (3 eta^2/4 - 5 x_t eta/6) q']
        U2 = (1/5) [-2 q^4 + 4 u q q' - 2 q'^2 + 3 u + (4 eta - 10 x_t/3) q^2 + (3 eta^2 - 10 x_t eta/3) q q']

    against central differences of the brackets

        U1 = (1/5) d/d eta   [u q - q' + (9 eta - 10 x_t) eta q/12]
        U2 = (1/5) d^2/d eta^2 [u^2 - q^2 + (9 eta - 10 x_t) eta u/6]
    """
    eta = np.asanyarray(etas, dtype=float)
    solution.check_range(eta - step)
    solution.check_range(eta + step)

    def first_bracket(e):
        q, qp, u, _, _, _ = solution.values(e)
        return u * q - qp + (9 * e - 10 * x_t) * e * q / 12

    def second_bracket(e):
        q, _, u, _, _, _ = solution.values(e)
        return u * u - q * q + (9 * e - 10 * x_t) * e * u / 6

    q, qp, u, _, _, _ = solution.values(eta)
    u1 = (u * qp - q ** 3 + (eta / 2 - 5 * x_t / 6) * q + (3 * eta * eta / 4 - 5 * x_t * eta / 6) * qp) / 5
    u2 = (-2 * q ** 4 + 4 * u * q * qp - 2 * qp * qp + 3 * u + (4 * eta - 10 * x_t / 3) * q * q
          + (3 * eta * eta - 10 * x_t * eta / 3) * q * qp) / 5
    d1 = (first_bracket(eta + step) - first_bracket(eta - step)) / (2 * step) / 5
    d2 = (second_bracket(eta + step) - 2 * second_bracket(eta) + second_bracket(eta - step)) / (step * step) / 5
    return {
        'u1_residual': float(np.max(np.abs(u1 - d1))),
        'u2_residual': float(np.max(np.abs(u2 - d2))),
    }


def alpha_prime_residual(solution: HMSolution, xs, step: float = 1e-4) -> float:
    """ max |alpha' - (q beta + q)| with alpha' by central differences """
    xa = np.asanyarray(xs, dtype=float)
    a_plus, _ = solution.alpha_beta_at(xa + step)
    a_minus, _ = solution.alpha_beta_at(xa - step)
    _, beta = solution.alpha_beta_at(xa)
    q = solution.q_at(xa)
    return float(np.max(np.abs((a_plus - a_minus) / (2 * step) - (q * beta + q))))


def collocation_residuals(solution: HMSolution) -> Dict[str, float]:
    """ u' = q^2 and u'' = 2 q q' by differences on the grid """
    s, q, qp, u = solution.s, solution.q, solution.qp, solution.u
    du = np.gradient(u, s, edge_order=2)
    ddu = np.gradient(du, s, edge_order=2)
    inner = slice(2, -2)
    return {
        'u_prime': float(np.max(np.abs(du - q * q)[inner])),
        'u_second': float(np.max(np.abs(ddu - 2 * q * qp)[inner])),
    }

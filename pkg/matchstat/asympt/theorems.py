
"""
    Finite-t Corrections
    ~~~~~~~~~~~~~~~~~~~~

        P{Nes_t <= j}          ~ F(x_t) - [4F''(x) + x^2 F'(x)/3] / (20 t^{2/3})
        P{L_t <= l}            ~ F_GUE(x^(t)) - [F_GUE''(x) + x^2 F_GUE'(x)/6] / (10 t^{2/3})
        P{Cro_t <= k, Nes_t <= j} ~ P{Cro_t <= k} P{Nes_t <= j} + F'(x) F'(x') / t^{2/3}

    with the integer levels of ScalingPoint; the exact sides come from the
    determinant route.
"""

from typing import Dict, Iterable, List, Optional, Tuple

from mpmath import mpf

from ..utils import WorkerPool
from ..common import DEFAULT_BITS
from ..opflow import joint_cdf, nes_marginal_cdf, lt_cdf
from ..painleve import TWDistribution, tw_distribution, GOE, GUE

from .scaling import ScalingPoint, cube_root
from .fitting import ResidualSeries


def _goe(tw: Optional[TWDistribution]) -> TWDistribution:
    return tw_distribution(which=GOE) if tw is None else tw


def _gue(tw: Optional[TWDistribution]) -> TWDistribution:
    return tw_distribution(which=GUE) if tw is None else tw


def thm13_approx(t: float, x: float, tw: Optional[TWDistribution] = None) -> float:
    tw = _goe(tw)
    point = ScalingPoint(t=t, x=x)
    correction = (4 * tw.pdf_prime(x) + x * x * tw.pdf(x) / 3) / (20 * cube_root(t) ** 2)
    return float(tw.cdf(point.x_t) - correction)


def thm15_approx(t: float, x: float, tw: Optional[TWDistribution] = None) -> float:
    tw = _gue(tw)
    point = ScalingPoint(t=t, x=x)
    correction = (tw.pdf_prime(x) + x * x * tw.pdf(x) / 6) / (10 * cube_root(t) ** 2)
    return float(tw.cdf(point.x_upper_t) - correction)


def thm11_correction(t: float, x: float, x_prime: float, tw: Optional[TWDistribution] = None) -> float:
    """ F'(x) F'(x') / t^{2/3} """
    tw = _goe(tw)
    return float(tw.pdf(x) * tw.pdf(x_prime)) / cube_root(t) ** 2


def thm11_joint_approx(t: float, x: float, x_prime: float, tw: Optional[TWDistribution] = None,
                       prec_bits: int = DEFAULT_BITS) -> float:
    point = ScalingPoint(t=t, x=x, x_prime=x_prime)
    product = _marginal(t, point.j, prec_bits) * _marginal(t, point.k, prec_bits)
    return product + thm11_correction(t=t, x=x, x_prime=x_prime, tw=tw)


def _marginal(t: float, j: int, prec_bits: int) -> float:
    return float(nes_marginal_cdf(t=t, j=j, prec_bits=prec_bits).value)


#
#   Exact sides, one task per worker
#

def _exact_nes(args: Tuple[float, int, int]) -> mpf:
    t, j, bits = args
    return nes_marginal_cdf(t=t, j=j, prec_bits=bits).value


def _exact_lt(args: Tuple[float, int, int]) -> mpf:
    t, l, bits = args
    return lt_cdf(t=t, l=l, prec_bits=bits).value


def _exact_joint(args: Tuple[float, int, int, int]) -> Tuple[mpf, mpf, mpf]:
    t, k, j, bits = args
    joint = joint_cdf(t=t, k=k, j=j, prec_bits=bits).value
    return joint, nes_marginal_cdf(t=t, j=k, prec_bits=bits).value, nes_marginal_cdf(t=t, j=j, prec_bits=bits).value


def thm13_marginal_series(xs: Iterable[float], tgrid: Iterable[float], tw: Optional[TWDistribution] = None,
                          prec_bits: int = DEFAULT_BITS) -> Dict[float, ResidualSeries]:
    """ residual series for several x at once; x values sharing a level share the determinant """
    tw = _goe(tw)
    xs = list(xs)
    tgrid = list(tgrid)
    levels = sorted({(t, ScalingPoint(t=t, x=x).j) for t in tgrid for x in xs})
    values = WorkerPool.map(_exact_nes, [(t, j, prec_bits) for t, j in levels])
    exact = dict(zip(levels, values))
    results = {}
    for x in xs:
        series = ResidualSeries(name='thm13 x=%g' % x)
        for t in tgrid:
            value = exact[(t, ScalingPoint(t=t, x=x).j)]
            series.append(t=t, residual=abs(float(value) - thm13_approx(t=t, x=x, tw=tw)))
        results[x] = series
    return results


def thm13_series(x: float, tgrid: Iterable[float], tw: Optional[TWDistribution] = None,
                 prec_bits: int = DEFAULT_BITS) -> ResidualSeries:
    return thm13_marginal_series(xs=[x], tgrid=tgrid, tw=tw, prec_bits=prec_bits)[x]


def thm15_series(x: float, tgrid: Iterable[float], tw: Optional[TWDistribution] = None,
                 prec_bits: int = DEFAULT_BITS) -> ResidualSeries:
    tw = _gue(tw)
    tgrid = list(tgrid)
    values = WorkerPool.map(_exact_lt, [(t, ScalingPoint(t=t, x=x).l, prec_bits) for t in tgrid])
    series = ResidualSeries(name='thm15 x=%g' % x)
    for t, value in zip(tgrid, values):
        series.append(t=t, residual=abs(float(value) - thm15_approx(t=t, x=x, tw=tw)))
    return series


def thm11_series(x: float, x_prime: float, tgrid: Iterable[float], tw: Optional[TWDistribution] = None,
                 prec_bits: int = DEFAULT_BITS) -> Tuple[ResidualSeries, List[float]]:
    """
    :return: residual series, and per t the ratio (joint - product) / (F'(x) F'(x') / t^{2/3})
    """
    tw = _goe(tw)
    tgrid = list(tgrid)
    points = [ScalingPoint(t=t, x=x, x_prime=x_prime) for t in tgrid]
    values = WorkerPool.map(_exact_joint, [(p.t, p.k, p.j, prec_bits) for p in points])
    series = ResidualSeries(name='thm11 x=%g x_prime=%g' % (x, x_prime))
    ratios = []
    for point, (joint, cro, nes) in zip(points, values):
        product = float(cro) * float(nes)
        correction = thm11_correction(t=point.t, x=x, x_prime=x_prime, tw=tw)
        difference = float(joint) - product
        series.append(t=point.t, residual=abs(difference - correction))
        ratios.append(difference / correction if correction != 0 else float('nan'))
    return series, ratios


"""
    Commands
    ~~~~~~~~

    One handler per subcommand. Each returns a CommandResult holding the
    JSON result object and, where a table makes sense, CSV rows.
"""

from typing import Any, Callable, Dict, List, Optional

import numpy as np
import mpmath

from ..utils import Config
from ..common import ValidationError
from ..combinat import enumerate_matchings, gkj_table, cov_cor, table1_rows
from ..combinat import sample_matching, mc_scaled_covariance, ScaledStats, cro, nes
from ..moments import DISCRETE, CONTINUOUS, h_discrete, h_continuous, p_transition
from ..detkernel import moments_for, toeplitz_det_certified, toeplitz_hankel_det_certified, opuc_at
from ..opflow import Route, DistributionPoint, JOINT, NES, LT
from ..opflow import joint_cdf, nes_marginal_cdf, lt_cdf, poisson_truncation_cdf
from ..opflow import prop1_quadrature, nes_quadrature, lt_quadrature
from ..painleve import HMSolution, solve_hm, tw_distribution, GOE, GUE
from ..asympt import Verifier, tgrid_from_text, covariance_poissonized, covariance_poisson_route
from ..walks import MCEstimate, conditional_kj, karlin_mcgregor_prob, no_move_share

from .shared import RunConfig


class CommandResult:

    def __init__(self, result: Dict[str, Any], header: List[str] = None, rows: List[List[Any]] = None):
        super().__init__()
        self.result = result
        self.header = header
        self.rows = rows

    @property
    def has_rows(self) -> bool:
        return self.header is not None and self.rows is not None


def _choice(run: RunConfig, name: str, options, default: str = None) -> str:
    value = run.get_string(name=name, default=default)
    if value is None:
        raise ValidationError('%s needs --%s (%s)' % (run.command, name, '|'.join(options)))
    if value not in options:
        raise ValidationError('--%s must be one of %s: %s' % (name, '|'.join(options), value))
    return value


def _solution(config: Config) -> HMSolution:
    return solve_hm(s_min=config.hm_s_min, s_max=config.hm_s_max, npoints=config.hm_npoints, tol=config.hm_tol)


#
#   combinat
#

def enumerate_command(run: RunConfig, config: Config) -> CommandResult:
    n = run.require_integer('n')
    rows = [[str(matching), cro(matching), nes(matching)] for matching in enumerate_matchings(n=n)]
    matchings = [{'arcs': arcs, 'cro': c, 'nes': d} for arcs, c, d in rows]
    return CommandResult(result={'n': n, 'count': len(rows), 'matchings': matchings},
                         header=['matching', 'cro', 'nes'], rows=rows)


def table_command(run: RunConfig, config: Config) -> CommandResult:
    n = run.require_integer('n')
    table = gkj_table(n=n)
    g = table.to_rows()
    rows = [[k, j, g[k][j]] for k in range(n + 1) for j in range(n + 1)]
    return CommandResult(result={'n': n, 'total': table.total, 'check': table.check(), 'g': g},
                         header=['k', 'j', 'g'], rows=rows)


def cov_command(run: RunConfig, config: Config) -> CommandResult:
    if run.has('t'):
        t = run.require_float('t')
        route = _choice(run, 'route', ('det', 'poisson'), default='det')
        if route == 'poisson':
            nmax = run.get_integer('nmax', default=6)
            outcome = covariance_poisson_route(t=t, nmax=nmax, bits=run.prec_bits)
        else:
            outcome = covariance_poissonized(t=t, prec_bits=run.prec_bits)
        return CommandResult(result=outcome.to_dict())
    if run.has('nmax'):
        rows = [list(row) for row in table1_rows(nmax=run.require_integer('nmax'))]
        items = [{'2n': size, 'count': count, 'covariance': cov, 'correlation': cor}
                 for size, count, cov, cor in rows]
        return CommandResult(result={'rows': items}, header=['2n', 'count', 'covariance', 'correlation'], rows=rows)
    n = run.require_integer('n')
    covariance, correlation = cov_cor(n=n)
    return CommandResult(result={'n': n, 'covariance': covariance, 'correlation': correlation},
                         header=['n', 'covariance', 'correlation'], rows=[[n, covariance, correlation]])


def sample_command(run: RunConfig, config: Config) -> CommandResult:
    n = run.require_integer('n')
    if run.has('reps'):
        reps = run.require_integer('reps')
        estimate, stderr = mc_scaled_covariance(n=n, reps=reps, seed=run.seed)
        return CommandResult(result={'n': n, 'reps': reps, 'estimate': estimate, 'stderr': stderr})
    matching = sample_matching(n=n, seed=run.seed)
    c, d = cro(matching), nes(matching)
    scaled = ScaledStats.from_stats(n=n, cro=c, nes=d)
    return CommandResult(result={'n': n, 'matching': str(matching), 'cro': c, 'nes': d,
                                 'cro_scaled': scaled.cro_scaled, 'nes_scaled': scaled.nes_scaled})


#
#   moments / detkernel
#

def moments_command(run: RunConfig, config: Config) -> CommandResult:
    kind = _choice(run, 'kind', (DISCRETE, CONTINUOUS, 'transition'), default=CONTINUOUS)
    t = run.require_float('t')
    l = run.require_integer('l')
    if kind == DISCRETE:
        value = h_discrete(l=l, m=run.require_integer('m'), t=t, prec_bits=run.prec_bits)
    elif kind == CONTINUOUS:
        value = h_continuous(l=l, t=t, prec_bits=run.prec_bits)
    else:
        value = p_transition(a=l, t=t, prec_bits=run.prec_bits)
    return CommandResult(result={'kind': kind, 't': t, 'l': l, 'value_decimal': value, 'prec_bits': run.prec_bits})


def det_command(run: RunConfig, config: Config) -> CommandResult:
    kind = _choice(run, 'kind', (DISCRETE, CONTINUOUS), default=DISCRETE)
    t = run.require_float('t')
    j = run.require_integer('j')
    m = j + run.require_integer('k') + 1 if kind == DISCRETE else None
    h = moments_for(kind=kind, t=t, size=j, prec_bits=run.prec_bits, m=m)
    det, cert = toeplitz_hankel_det_certified(h=h, j=j, tolerance_bits=config.tolerance_bits,
                                              ceiling_bits=config.ceiling_bits)
    result = {'kind': kind, 't': t, 'j': j}
    if m is not None:
        result['m'] = m
    result['toeplitz_hankel'] = det
    result['certificate'] = cert.to_dict()
    if run.has('l'):
        l = run.require_integer('l')
        moments = moments_for(kind=kind, t=t, size=max(l, 1), prec_bits=run.prec_bits, m=m)
        toeplitz, toeplitz_cert = toeplitz_det_certified(h=moments, n=l, tolerance_bits=config.tolerance_bits,
                                                         ceiling_bits=config.ceiling_bits)
        result['l'] = l
        result['toeplitz'] = toeplitz
        result['toeplitz_certificate'] = toeplitz_cert.to_dict()
    if run.has('nmax'):
        opuc = opuc_at(kind=kind, t=t, nmax=run.require_integer('nmax'), m=m, prec_bits=run.prec_bits)
        result['pi0'] = list(opuc.pi0)
        result['norms'] = list(opuc.norms)
    return CommandResult(result=result)


#
#   opflow
#

def _flow_point(which: str, t: float, log_value, prec_bits: int, **levels) -> DistributionPoint:
    with mpmath.workprec(prec_bits):
        value = mpmath.exp(log_value)
    return DistributionPoint(which=which, t=t, value=value, log_value=log_value, route=Route.PROP1_QUADRATURE,
                             prec_bits=prec_bits, **levels)


def cdf_command(run: RunConfig, config: Config) -> CommandResult:
    which = run.target
    if which not in (JOINT, NES, LT):
        raise ValidationError('cdf needs one of joint|nes|lt: %s' % which)
    route = Route(_choice(run, 'route', [item.value for item in Route], default=Route.DETERMINANT.value))
    t = run.require_float('t')
    bits = run.prec_bits
    quad = {'nodes_per_unit': config.nodes_per_unit, 'tolerance': config.quadrature_tolerance}
    if route == Route.POISSON_TRUNCATION and which != JOINT:
        raise ValidationError('route poisson is only available for joint')
    if which == JOINT:
        k = run.require_integer('k')
        j = run.require_integer('j')
        if route == Route.DETERMINANT:
            point = joint_cdf(t=t, k=k, j=j, prec_bits=bits, tolerance_bits=config.tolerance_bits)
        elif route == Route.PROP1_QUADRATURE:
            log_value = prop1_quadrature(t=t, k=k, j=j, prec_bits=bits, **quad)
            point = _flow_point(JOINT, t, log_value, bits, k=k, j=j)
        else:
            point = poisson_truncation_cdf(t=t, k=k, j=j, nmax=run.get_integer('nmax', default=8), prec_bits=bits)
    elif which == NES:
        j = run.require_integer('j')
        if route == Route.DETERMINANT:
            point = nes_marginal_cdf(t=t, j=j, prec_bits=bits, tolerance_bits=config.tolerance_bits)
        else:
            point = _flow_point(NES, t, nes_quadrature(t=t, j=j, prec_bits=bits, **quad), bits, j=j)
    else:
        l = run.require_integer('l')
        if route == Route.DETERMINANT:
            point = lt_cdf(t=t, l=l, prec_bits=bits, tolerance_bits=config.tolerance_bits)
        else:
            point = _flow_point(LT, t, lt_quadrature(t=t, l=l, prec_bits=bits, **quad), bits, l=l)
    return CommandResult(result=point.to_dict())


#
#   painleve
#

def tw_command(run: RunConfig, config: Config) -> CommandResult:
    which = _choice(run, 'which', (GOE, GUE), default=GOE)
    tw = tw_distribution(which=which, solution=_solution(config=config))
    result: Dict[str, Any] = {'which': which}
    if run.has('x'):
        x = run.require_float('x')
        deriv = run.get_integer('deriv', default=0)
        result['x'] = x
        result['deriv'] = deriv
        result['value'] = float(tw.derivative(x, order=deriv))
    if run.has('p'):
        p = run.require_float('p')
        result['p'] = p
        result['quantile'] = tw.ppf(p)
    if len(result) == 1:
        result['mean'] = tw.mean()
        result['variance'] = tw.variance()
    return CommandResult(result=result)


def tw_table_command(run: RunConfig, config: Config) -> CommandResult:
    solution = _solution(config=config)
    goe = tw_distribution(which=GOE, solution=solution)
    gue = tw_distribution(which=GUE, solution=solution)
    x_min = run.get_float('xmin', default=-6.0)
    x_max = run.get_float('xmax', default=4.0)
    step = run.get_float('step', default=0.1)
    if step <= 0 or x_max < x_min:
        raise ValidationError('need step > 0 and xmin <= xmax: %s, %s, %s' % (x_min, x_max, step))
    count = int(round((x_max - x_min) / step)) + 1
    xs = x_min + step * np.arange(count)
    columns = [goe.cdf(xs), goe.pdf(xs), goe.pdf_prime(xs), gue.cdf(xs), gue.pdf(xs), gue.pdf_prime(xs)]
    rows = [[float(x)] + [float(column[i]) for column in columns] for i, x in enumerate(xs)]
    header = ['x', 'F_goe', 'F_goe_prime', 'F_goe_second', 'F_gue', 'F_gue_prime', 'F_gue_second']
    result = {'rows': [dict(zip(header, row)) for row in rows]}
    return CommandResult(result=result, header=header, rows=rows)


#
#   asympt
#

def _tgrid(run: RunConfig, config: Config) -> Optional[List[float]]:
    value = run.params.get('tgrid')
    if value is None:
        return config.verify_tgrid
    if isinstance(value, (list, tuple)):
        return list(tgrid_from_text(','.join(str(item) for item in value)))
    return list(tgrid_from_text(str(value)))


def verify_command(run: RunConfig, config: Config) -> CommandResult:
    if run.target is None:
        raise ValidationError('verify needs a check name')
    verifier = Verifier(solution=_solution(config=config), prec_bits=run.prec_bits)
    report = verifier.run(check=run.target, x=run.get_float('x', default=0.0), x_prime=run.get_float('xp', default=0.0),
                          tgrid=_tgrid(run=run, config=config))
    info = report.to_dict()
    rows = [[item['name'], point['t'], point['residual']] for item in info['series'] for point in item['points']]
    return CommandResult(result=info, header=['series', 't', 'residual'], rows=rows)


#
#   walks
#

def walks_command(run: RunConfig, config: Config) -> CommandResult:
    t = run.require_float('t')
    size = run.require_integer('N')
    reps = run.require_integer('reps')
    law = conditional_kj(t=t, size=size, reps=reps, seed=run.seed)
    event = MCEstimate.from_counts(hits=law.accepted, total=reps, reps=reps, accepted=law.accepted)
    exact = karlin_mcgregor_prob(t=t, size=size, prec_bits=run.prec_bits)
    no_move = law.frequency(0, 0)
    rows = law.to_rows()
    header = ['k', 'j', 'count', 'empirical_cdf', 'stderr', 'oracle']
    result = {
        't': t, 'N': size, 'reps': reps,
        'event': event.to_dict(),
        'karlin_mcgregor': exact,
        'event_within_3_sigma': event.within(float(exact)),
        'no_move': {'empirical': no_move.to_dict(), 'exact': no_move_share(t=t, size=size, prec_bits=run.prec_bits)},
        'duality_pvalue': law.duality_pvalue(seed=run.seed),
        'cells': [dict(zip(header, row)) for row in rows],
    }
    return CommandResult(result=result, header=header, rows=rows)


HANDLERS: Dict[str, Callable[[RunConfig, Config], CommandResult]] = {
    'enumerate': enumerate_command,
    'table': table_command,
    'cov': cov_command,
    'sample': sample_command,
    'moments': moments_command,
    'det': det_command,
    'cdf': cdf_command,
    'tw': tw_command,
    'tw-table': tw_table_command,
    'verify': verify_command,
    'walks': walks_command,
}

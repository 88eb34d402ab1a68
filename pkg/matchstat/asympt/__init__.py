
"""
    Asymptotics
    ~~~~~~~~~~~

    Scaling maps, finite-t correction formulas, Painleve-regime checks of
    the Verblunsky data, the Poissonized covariance and decay fits
"""

from .scaling import a_of_gamma, a_series, a_closed, s_of_gamma, s_expansion, s_expansion_residual
from .scaling import nes_level, lt_level, ScalingPoint
from .fitting import ResidualSeries, fit_decay, fit_line
from .theorems import thm13_approx, thm15_approx, thm11_joint_approx, thm11_correction
from .theorems import thm13_series, thm13_marginal_series, thm15_series, thm11_series
from .propositions import prop62_check, prop62_prediction, prop63_check, prop63_prediction
from .propositions import exponential_regime_value, exponential_regime_fit
from .covariance import CovarianceResult, PoissonizedCovariance
from .covariance import covariance_poissonized, correlation_poissonized, covariance_poisson_route
from .verify import VerifyReport, Verifier, verify, tgrid_from_text, CHECKS


__all__ = [

    'a_of_gamma', 'a_series', 'a_closed', 's_of_gamma', 's_expansion', 's_expansion_residual',
    'nes_level', 'lt_level', 'ScalingPoint',
    'ResidualSeries', 'fit_decay', 'fit_line',
    'thm13_approx', 'thm15_approx', 'thm11_joint_approx', 'thm11_correction',
    'thm13_series', 'thm13_marginal_series', 'thm15_series', 'thm11_series',
    'prop62_check', 'prop62_prediction', 'prop63_check', 'prop63_prediction',
    'exponential_regime_value', 'exponential_regime_fit',
    'CovarianceResult', 'PoissonizedCovariance',
    'covariance_poissonized', 'correlation_poissonized', 'covariance_poisson_route',
    'VerifyReport', 'Verifier', 'verify', 'tgrid_from_text', 'CHECKS',

]


"""
    OPUC Flow
    ~~~~~~~~~

    Distribution functions by determinant, by flow quadrature and by
    Poisson truncation, and the differential identities behind them
"""

from .distribution import Route, DistributionPoint, JOINT, NES, LT
from .distribution import joint_cdf, nes_marginal_cdf, lt_cdf, poisson_truncation_cdf
from .quadrature import prop1_quadrature, nes_quadrature, lt_quadrature, gauss_legendre_nodes
from .identities import IdentityCheck, IdentityReport, IdentityChecker
from .identities import ode_identity_checks, product_identity_checks


__all__ = [

    'Route', 'DistributionPoint', 'JOINT', 'NES', 'LT',
    'joint_cdf', 'nes_marginal_cdf', 'lt_cdf', 'poisson_truncation_cdf',
    'prop1_quadrature', 'nes_quadrature', 'lt_quadrature', 'gauss_legendre_nodes',
    'IdentityCheck', 'IdentityReport', 'IdentityChecker',
    'ode_identity_checks', 'product_identity_checks',

]


"""
    Painleve II
    ~~~~~~~~~~~

    Hastings-McLeod solution, Tracy-Widom GOE/GUE distribution functions
    and the correction functions built from them
"""

from .hastings import S_MIN, S_MAX, NPOINTS, TOL
from .hastings import HMSolution, HastingsMcLeod, solve_hm, alpha_beta, airy_tail, left_boundary
from .tracy import GOE, GUE, TWDistribution, tw_distribution, tw_cdf, tw_pdf, tw_pdf_prime
from .corrections import g1g2h, g_integral_check, goe_correction_e, gue_correction
from .corrections import goe_identity_residual, gue_identity_residual
from .corrections import perfect_derivative_check, alpha_prime_residual, collocation_residuals


__all__ = [

    'S_MIN', 'S_MAX', 'NPOINTS', 'TOL',
    'HMSolution', 'HastingsMcLeod', 'solve_hm', 'alpha_beta', 'airy_tail', 'left_boundary',
    'GOE', 'GUE', 'TWDistribution', 'tw_distribution', 'tw_cdf', 'tw_pdf', 'tw_pdf_prime',
    'g1g2h', 'g_integral_check', 'goe_correction_e', 'gue_correction',
    'goe_identity_residual', 'gue_identity_residual',
    'perfect_derivative_check', 'alpha_prime_residual', 'collocation_residuals',

]

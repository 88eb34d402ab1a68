# -*- coding: utf-8 -*-
#
#   MATCHSTAT : Crossings and Nestings of Random Matchings
#
# ==============================================================================
# MIT License
#
# Copyright (c) 2024 Matchstat Developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
# ==============================================================================

from .common import *
from .combinat import *
from .moments import *
from .detkernel import *
from .opflow import *
from .painleve import *
from .asympt import *
from .walks import *


name = 'MATCHSTAT'

__version__ = '0.1.0'


__all__ = [

    ####################################
    #
    #   Common
    #
    ####################################

    'MatchstatError',
    'ValidationError', 'RangeError', 'DomainError', 'DegenerateFitError',
    'PrecisionError', 'ConvergenceError', 'SingularityError',
    'CapacityError', 'InsufficientAcceptanceError',
    'Certificate', 'DEFAULT_BITS',

    ####################################
    #
    #   Combinatorics
    #
    ####################################

    'Matching', 'StatTable', 'ScaledStats',
    'cro', 'nes', 'enumerate_matchings', 'gkj_table', 'cov_cor',
    'sample_matching', 'mc_scaled_covariance', 'monotonicity_check',
    'depoissonization_check', 'poisson_sum',

    ####################################
    #
    #   Determinants
    #
    ####################################

    'MomentSequence', 'h_discrete', 'h_continuous', 'p_transition',
    'toeplitz_det', 'toeplitz_hankel_det', 'levinson_opuc', 'OpucSequence',

    ####################################
    #
    #   Distribution functions
    #
    ####################################

    'DistributionPoint', 'Route',
    'joint_cdf', 'nes_marginal_cdf', 'lt_cdf', 'poisson_truncation_cdf',
    'prop1_quadrature', 'nes_quadrature', 'lt_quadrature',
    'ode_identity_checks', 'product_identity_checks',

    ####################################
    #
    #   Painleve II
    #
    ####################################

    'HMSolution', 'solve_hm', 'TWDistribution', 'tw_cdf', 'tw_pdf', 'tw_pdf_prime', 'g1g2h',

    ####################################
    #
    #   Asymptotics
    #
    ####################################

    'a_of_gamma', 'ScalingPoint', 'ResidualSeries', 'fit_decay',
    'thm13_approx', 'thm15_approx', 'thm11_joint_approx',
    'prop62_check', 'prop63_check', 'covariance_poissonized', 'verify',

    ####################################
    #
    #   Walks
    #
    ####################################

    'WalkEnsemble', 'MCEstimate', 'simulate_event_prob', 'conditional_kj', 'karlin_mcgregor_prob',

]

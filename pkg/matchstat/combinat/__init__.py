
"""
    Combinatorics of Matchings
    ~~~~~~~~~~~~~~~~~~~~~~~~~~

    Exact statistics, enumeration, sampling and exact distribution tables
"""

from .matching import Arc, Matching, ScaledStats
from .stats import cro, nes, cro_arcs, nes_arcs, shape_stats
from .stats import longest_increasing, longest_decreasing
from .enumeration import MAX_ENUM_N, double_factorial, catalan
from .enumeration import StatTable, enumerate_matchings, gkj_table, table_moments, cov_cor
from .enumeration import monotonicity_check, table1_rows
from .sampler import sample_matching, mc_scaled_covariance, sample_scaled_stats, jackknife_covariance
from .depoisson import poisson_sum, size_probabilities, depoissonization_check, SandwichRow


__all__ = [

    'Arc', 'Matching', 'ScaledStats',
    'cro', 'nes', 'cro_arcs', 'nes_arcs', 'shape_stats',
    'longest_increasing', 'longest_decreasing',
    'MAX_ENUM_N', 'double_factorial', 'catalan',
    'StatTable', 'enumerate_matchings', 'gkj_table', 'table_moments', 'cov_cor',
    'monotonicity_check', 'table1_rows',
    'sample_matching', 'mc_scaled_covariance', 'sample_scaled_stats', 'jackknife_covariance',
    'poisson_sum', 'size_probabilities', 'depoissonization_check', 'SandwichRow',

]


"""
    Moments
    ~~~~~~~

    Trigonometric moments of the discrete and continuous weights,
    and the random walk transition kernel
"""

from .weights import DISCRETE, CONTINUOUS
from .weights import MomentSequence
from .weights import h_discrete, h_continuous, p_transition, aliased_bessel_sum


__all__ = [

    'DISCRETE', 'CONTINUOUS',
    'MomentSequence',
    'h_discrete', 'h_continuous', 'p_transition', 'aliased_bessel_sum',

]

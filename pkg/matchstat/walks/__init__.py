
"""
    Walks
    ~~~~~

    Non-intersecting continuous-time random walks: rejection sampling of the
    return-and-order event, the (K, J) law and its determinant oracles
"""

from .ensemble import WalkEnsemble
from .montecarlo import MCEstimate, KJLaw
from .montecarlo import simulate_event_prob, conditional_kj, single_walker_return
from .montecarlo import karlin_mcgregor_prob, no_move_share, kj_oracle


__all__ = [

    'WalkEnsemble',
    'MCEstimate', 'KJLaw',
    'simulate_event_prob', 'conditional_kj', 'single_walker_return',
    'karlin_mcgregor_prob', 'no_move_share', 'kj_oracle',

]


"""
    Walk Ensembles
    ~~~~~~~~~~~~~~

    N continuous-time simple random walks X_i, i = 0..N-1, with unit rate
    up and unit rate down, X_i(0) = -i. The event of interest:

        A: X_i(t) = -i for every i
        B: X_0 > X_1 > ... > X_{N-1} at all times, and X_{N-1} >= -N + 1

    On A and B, K is the height max_tau X_0(tau) and J is one more than the
    largest index of a walker that moved (0 when none did).
"""

from typing import List, Tuple

import numpy as np

from ..common import ValidationError


Event = Tuple[float, int]   # (time, step)


class WalkEnsemble:
    """ one sample: per-walker event lists with strictly increasing times """

    def __init__(self, t: float, events: List[List[Event]], seed: int = None):
        super().__init__()
        self.t = float(t)
        self.events = events
        self.seed = seed
        for walker in events:
            times = [time for time, _ in walker]
            assert all(a < b for a, b in zip(times, times[1:])), 'event times not increasing: %s' % times
            assert all(step in (-1, 1) for _, step in walker), 'steps must be +/-1: %s' % walker

    @property
    def size(self) -> int:
        return len(self.events)

    def start(self, i: int) -> int:
        return -i

    def merged(self) -> List[Tuple[float, int, int]]:
        """ (time, walker, step) for all walkers in time order """
        array = [(time, i, step) for i, walker in enumerate(self.events) for time, step in walker]
        array.sort()
        return array

    def path(self) -> np.ndarray:
        """ positions after each merged event, row 0 is tau = 0 """
        size = self.size
        position = np.array([self.start(i) for i in range(size)], dtype=int)
        rows = [position.copy()]
        for _, i, step in self.merged():
            position[i] += step
            rows.append(position.copy())
        return np.array(rows)

    def returns(self) -> bool:
        final = self.path()[-1]
        return all(final[i] == self.start(i) for i in range(self.size))

    def ordered(self) -> bool:
        path = self.path()
        if self.size > 1 and not np.all(path[:, :-1] > path[:, 1:]):
            return False
        return bool(np.all(path[:, -1] >= -self.size + 1))

    def in_event(self) -> bool:
        return self.returns() and self.ordered()

    def height(self) -> int:
        """ K = max over [0, t] of X_0 """
        return int(max(0, self.path()[:, 0].max()))

    def depth(self) -> int:
        """ J = 1 + largest index of a walker with at least one event """
        moved = [i for i, walker in enumerate(self.events) if walker]
        return 0 if not moved else moved[-1] + 1

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        counts = [len(walker) for walker in self.events]
        return '<%s t=%g N=%d events=%s />' % (clazz, self.t, self.size, counts)

    @classmethod
    def sample(cls, t: float, size: int, rng: np.random.Generator, seed: int = None):
        if t < 0 or size < 1:
            raise ValidationError('need t >= 0 and N >= 1: %s, %s' % (t, size))
        events = []
        for _ in range(size):
            count = int(rng.poisson(2 * t))
            times = np.sort(rng.uniform(0, t, size=count)) if count else []
            steps = rng.choice((-1, 1), size=count) if count else []
            events.append([(float(time), int(step)) for time, step in zip(times, steps)])
        return cls(t=t, events=events, seed=seed)

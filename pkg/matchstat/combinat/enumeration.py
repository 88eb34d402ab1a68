
"""
    Exhaustive Enumeration
    ~~~~~~~~~~~~~~~~~~~~~~

    Canonical order: pair the smallest free point with each larger free
    point in turn, then recurse. The (2n-1) first-arc branches are
    independent and are counted in parallel.
"""

import math
from fractions import Fraction
from typing import Iterator, List, Dict, Tuple

import mpmath

from ..utils import Logging, WorkerPool, SharedCacheManager
from ..common import ValidationError, CapacityError

from .matching import Matching, Arc
from .stats import cro_arcs, nes_arcs


MAX_ENUM_N = 9


def double_factorial(n: int) -> int:
    """ (2n-1)!! = number of matchings of [2n] """
    result = 1
    for k in range(1, 2 * n, 2):
        result *= k
    return result


def to_mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def check_size(n: int, limit: int = MAX_ENUM_N, lower: int = 1):
    if n < lower:
        raise ValidationError('n must be >= %d: %d' % (lower, n))
    if n > limit:
        raise CapacityError('n=%d exceeds the enumeration guard n <= %d (%d matchings)'
                            % (n, limit, double_factorial(n)))


def _iter_arcs(free: List[int], prefix: List[Arc]) -> Iterator[List[Arc]]:
    if len(free) == 0:
        yield prefix
        return
    first = free[0]
    for index in range(1, len(free)):
        rest = free[1:index] + free[index + 1:]
        prefix.append((first, free[index]))
        yield from _iter_arcs(free=rest, prefix=prefix)
        prefix.pop()


def enumerate_matchings(n: int) -> Iterator[Matching]:
    """ every matching of [2n] exactly once, in canonical order """
    check_size(n=n)
    for arcs in _iter_arcs(free=list(range(1, 2 * n + 1)), prefix=[]):
        yield Matching(arcs=arcs)


def _count_branch(args: Tuple[int, int]) -> Dict[Tuple[int, int], int]:
    """ joint counts of (cro, nes) over matchings whose first arc is (1, partner) """
    n, partner = args
    free = [p for p in range(2, 2 * n + 1) if p != partner]
    counts: Dict[Tuple[int, int], int] = {}
    for arcs in _iter_arcs(free=free, prefix=[(1, partner)]):
        # prefix arcs are generated in opener order already
        key = (cro_arcs(arcs), nes_arcs(arcs))
        counts[key] = counts.get(key, 0) + 1
    return counts


class StatTable:
    """
        Joint distribution table
        ~~~~~~~~~~~~~~~~~~~~~~~~

        g[k][j] = #{M : cro(M) <= k, nes(M) <= j}, for 0 <= k, j <= n
    """

    def __init__(self, n: int, g: List[List[int]]):
        super().__init__()
        self.__n = n
        self.__g = tuple(tuple(row) for row in g)

    @property
    def n(self) -> int:
        return self.__n

    @property
    def g(self) -> Tuple[Tuple[int, ...], ...]:
        return self.__g

    @property
    def total(self) -> int:
        return self.__g[self.__n][self.__n]

    def get(self, k: int, j: int) -> int:
        """ g_{k,j}(n) for any k, j >= 0 (levels above n saturate) """
        if k < 0 or j < 0:
            return 0
        n = self.__n
        return self.__g[min(k, n)][min(j, n)]

    def mass(self, k: int, j: int) -> int:
        """ #{M : cro(M) = k, nes(M) = j} """
        return self.get(k, j) - self.get(k - 1, j) - self.get(k, j - 1) + self.get(k - 1, j - 1)

    def probability(self, k: int, j: int) -> Fraction:
        return Fraction(self.get(k, j), self.total)

    def check(self) -> bool:
        """ monotone, symmetric, total (2n-1)!!, Catalan first row """
        n = self.__n
        g = self.__g
        for k in range(n + 1):
            for j in range(n + 1):
                if g[k][j] != g[j][k]:
                    return False
                if k > 0 and g[k][j] < g[k - 1][j]:
                    return False
                if j > 0 and g[k][j] < g[k][j - 1]:
                    return False
        if self.total != double_factorial(n):
            return False
        return n == 0 or g[1][n] == catalan(n)

    @classmethod
    def from_counts(cls, n: int, counts: Dict[Tuple[int, int], int]):
        size = n + 1
        grid = [[0] * size for _ in range(size)]
        for (c, d), count in counts.items():
            grid[c][d] += count
        # two-dimensional running sums
        for k in range(size):
            for j in range(size):
                value = grid[k][j]
                if k > 0:
                    value += grid[k - 1][j]
                if j > 0:
                    value += grid[k][j - 1]
                if k > 0 and j > 0:
                    value -= grid[k - 1][j - 1]
                grid[k][j] = value
        return cls(n=n, g=grid)

    def to_rows(self) -> List[List[int]]:
        return [list(row) for row in self.__g]

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s n=%d total=%d />' % (clazz, self.n, self.total)


class TableBuilder(Logging):

    LOG_TAG = '[ENUM]'

    def build(self, n: int) -> StatTable:
        if n == 0:
            # the empty matching
            return StatTable(n=0, g=[[1]])
        check_size(n=n)
        branches = [(n, partner) for partner in range(2, 2 * n + 1)]
        self.info(msg='enumerating %d matchings of [%d] in %d branches' % (double_factorial(n), 2 * n, len(branches)))
        results = WorkerPool.map(_count_branch, branches)
        counts: Dict[Tuple[int, int], int] = {}
        for part in results:
            for key, value in part.items():
                counts[key] = counts.get(key, 0) + value
        table = StatTable.from_counts(n=n, counts=counts)
        assert table.total == double_factorial(n), 'enumeration count error: %d' % table.total
        return table


def gkj_table(n: int) -> StatTable:
    """ exact table g_{k,j}(n) by full enumeration (memoised) """
    if n != 0:
        check_size(n=n)
    man = SharedCacheManager()
    return man.fetch(name='stat_tables', key=n, creator=lambda: TableBuilder().build(n=n))


def table_moments(table: StatTable) -> Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
    """ E[cro], E[nes], Var[cro], Var[nes], Cov under the uniform measure """
    n = table.n
    total = table.total
    sx = sy = sxx = syy = sxy = 0
    for k in range(n + 1):
        for j in range(n + 1):
            w = table.mass(k, j)
            if w == 0:
                continue
            sx += w * k
            sy += w * j
            sxx += w * k * k
            syy += w * j * j
            sxy += w * k * j
    ex = Fraction(sx, total)
    ey = Fraction(sy, total)
    var_x = Fraction(sxx, total) - ex * ex
    var_y = Fraction(syy, total) - ey * ey
    cov = Fraction(sxy, total) - ex * ey
    return ex, ey, var_x, var_y, cov


def cov_cor(n: int) -> Tuple[Fraction, float]:
    """ exact covariance of (cro_n, nes_n) and the correlation (nan when degenerate) """
    table = gkj_table(n=n)
    _, _, var_x, var_y, cov = table_moments(table=table)
    if var_x == 0 or var_y == 0:
        return cov, float('nan')
    with mpmath.workprec(128):
        cor = to_mpf(cov) / mpmath.sqrt(to_mpf(var_x) * to_mpf(var_y))
    return cov, float(cor)


def monotonicity_check(n: int) -> bool:
    """ g_{k,j}(n+1) <= (2n+1) g_{k,j}(n) for all k, j """
    check_size(n=n, limit=MAX_ENUM_N - 1)
    small = gkj_table(n=n)
    large = gkj_table(n=n + 1)
    for k in range(n + 2):
        for j in range(n + 2):
            if large.get(k, j) > (2 * n + 1) * small.get(k, j):
                return False
    return True


def table1_rows(nmax: int) -> List[Tuple[int, int, Fraction, float]]:
    """ (2n, count, covariance, correlation) for n = 2..nmax """
    rows = []
    for n in range(2, nmax + 1):
        cov, cor = cov_cor(n=n)
        rows.append((2 * n, double_factorial(n), cov, cor))
    return rows

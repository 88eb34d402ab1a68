
"""
    Crossing & Nesting Statistics
    ~~~~~~~~~~~~~~~~~~~~~~~~~~~~~

    cro: size of the largest set of pairwise crossing arcs
         i_1 < ... < i_r < j_1 < ... < j_r
    nes: size of the largest set of pairwise nested arcs
         i_1 < ... < i_r < j_r < ... < j_1
"""

from bisect import bisect_left
from typing import Sequence, Tuple, List

from .matching import Matching, Arc


def longest_increasing(values: Sequence[int]) -> int:
    """ length of the longest strictly increasing subsequence (patience sorting) """
    piles: List[int] = []
    for v in values:
        pos = bisect_left(piles, v)
        if pos == len(piles):
            piles.append(v)
        else:
            piles[pos] = v
    return len(piles)


def longest_decreasing(values: Sequence[int]) -> int:
    return longest_increasing([-v for v in values])


def cro_arcs(arcs: Sequence[Arc]) -> int:
    """
    Separator sweep over arcs sorted by opener.

    Every r-crossing straddles the separator p = j_1 (its first closer):
    all of its openers are < p and all of its closers are >= p. Conversely a
    chain of straddling arcs with openers and closers both increasing is an
    r-crossing, since every opener precedes p and every closer follows it.
    So cro is the max over p of the longest such chain among arcs that
    straddle p. Only closers need to be tried as separators.
    """
    best = 0
    for _, p in arcs:
        chain = [b for a, b in arcs if a < p <= b]
        if len(chain) <= best:
            continue
        # openers are already increasing (sorted), closers must increase too
        size = longest_increasing(chain)
        if size > best:
            best = size
    return best


def nes_arcs(arcs: Sequence[Arc]) -> int:
    """ longest strictly decreasing run of closers, arcs sorted by opener """
    return longest_decreasing([b for _, b in arcs])


def cro(matching: Matching) -> int:
    return cro_arcs(arcs=matching.arcs)


def nes(matching: Matching) -> int:
    return nes_arcs(arcs=matching.arcs)


def shape_stats(arcs: Sequence[Arc]) -> Tuple[int, int]:
    """
    (cro, nes) read off an oscillating tableau.

    Points are visited from 2n down to 1: at the closer of (a, b) the opener
    a is row-inserted (RSK); at an opener, that opener is the largest entry
    present and sits at a corner, so it is simply removed. The maximal
    number of rows met is cro, the maximal first-row length is nes.
    """
    size = 2 * len(arcs)
    partner = [0] * (size + 1)
    for a, b in arcs:
        partner[b] = a
    rows: List[List[int]] = []
    max_rows = 0
    max_cols = 0
    for p in range(size, 0, -1):
        x = partner[p]
        if x > 0:
            # p is a closer, insert its opener
            for row in rows:
                pos = bisect_left(row, x)
                if pos == len(row):
                    row.append(x)
                    x = 0
                    break
                row[pos], x = x, row[pos]
            if x > 0:
                rows.append([x])
            if len(rows) > max_rows:
                max_rows = len(rows)
            if len(rows[0]) > max_cols:
                max_cols = len(rows[0])
        else:
            # p is an opener, the maximal entry
            for r in range(len(rows) - 1, -1, -1):
                row = rows[r]
                if row[-1] == p:
                    row.pop()
                    if len(row) == 0:
                        rows.pop(r)
                    break
    return max_rows, max_cols

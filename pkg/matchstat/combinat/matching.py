
"""
    Matchings
    ~~~~~~~~~

    A complete matching of [2n] stored as arcs (opener, closer), 1-based,
    sorted by opener.
"""

import math
from typing import Iterable, List, Tuple

from ..common import ValidationError


Arc = Tuple[int, int]


class Matching:

    def __init__(self, arcs: Iterable[Arc]):
        super().__init__()
        array = []
        for pair in arcs:
            if len(pair) != 2:
                raise ValidationError('arc error: %s' % str(pair))
            a, b = int(pair[0]), int(pair[1])
            # canonical form: opener first
            array.append((a, b) if a < b else (b, a))
        array.sort()
        self.__arcs = tuple(array)
        check_arcs(arcs=self.__arcs)

    @property
    def n(self) -> int:
        """ number of arcs """
        return len(self.__arcs)

    @property
    def arcs(self) -> Tuple[Arc, ...]:
        return self.__arcs

    @property
    def openers(self) -> List[int]:
        return [arc[0] for arc in self.__arcs]

    @property
    def closers(self) -> List[int]:
        return [arc[1] for arc in self.__arcs]

    def involution(self) -> List[int]:
        """ fixed-point-free involution sigma on [2n] as a 1-based one-line list """
        sigma = [0] * (2 * self.n)
        for a, b in self.__arcs:
            sigma[a - 1] = b
            sigma[b - 1] = a
        return sigma

    def __eq__(self, other) -> bool:
        if isinstance(other, Matching):
            return self.__arcs == other.arcs
        return False

    def __hash__(self) -> int:
        return hash(self.__arcs)

    def __len__(self) -> int:
        return len(self.__arcs)

    def __str__(self) -> str:
        return '{%s}' % ','.join('(%d,%d)' % arc for arc in self.__arcs)

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s n=%d arcs="%s" />' % (clazz, self.n, self)

    @classmethod
    def parse(cls, text: str):
        """ parse '(1,3),(2,4)' or '1-3 2-4' """
        cleaned = text.replace('{', ' ').replace('}', ' ').replace('(', ' ').replace(')', ' ')
        cleaned = cleaned.replace('-', ',').replace(';', ' ')
        numbers = [int(item) for item in cleaned.replace(',', ' ').split()]
        if len(numbers) % 2 != 0:
            raise ValidationError('odd number of endpoints: %s' % text)
        pairs = [(numbers[i], numbers[i + 1]) for i in range(0, len(numbers), 2)]
        return cls(arcs=pairs)


def check_arcs(arcs: Tuple[Arc, ...]):
    size = 2 * len(arcs)
    seen = set()
    for a, b in arcs:
        if a == b:
            raise ValidationError('loop arc: (%d,%d)' % (a, b))
        for p in (a, b):
            if p < 1 or p > size:
                raise ValidationError('endpoint %d outside [1, %d]' % (p, size))
            if p in seen:
                raise ValidationError('endpoint %d used twice' % p)
            seen.add(p)


class ScaledStats:
    """ (stat - sqrt(2n)) / ((2n)^(1/6) / 2) for cro and nes """

    def __init__(self, n: int, cro_scaled: float, nes_scaled: float):
        super().__init__()
        self.__n = n
        self.__cro = cro_scaled
        self.__nes = nes_scaled

    @property
    def n(self) -> int:
        return self.__n

    @property
    def cro_scaled(self) -> float:
        return self.__cro

    @property
    def nes_scaled(self) -> float:
        return self.__nes

    @classmethod
    def centre(cls, n: int) -> float:
        return math.sqrt(2 * n)

    @classmethod
    def width(cls, n: int) -> float:
        return 0.5 * (2 * n) ** (1.0 / 6.0)

    @classmethod
    def scale(cls, n: int, stat: int) -> float:
        return (stat - cls.centre(n)) / cls.width(n)

    @classmethod
    def unscale(cls, n: int, value: float) -> int:
        return int(round(value * cls.width(n) + cls.centre(n)))

    @classmethod
    def from_stats(cls, n: int, cro: int, nes: int):
        return cls(n=n, cro_scaled=cls.scale(n, cro), nes_scaled=cls.scale(n, nes))

    def to_stats(self) -> Tuple[int, int]:
        """ recover the integer (cro, nes) """
        return self.unscale(self.__n, self.__cro), self.unscale(self.__n, self.__nes)

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s n=%d cro="%.6f" nes="%.6f" />' % (clazz, self.n, self.cro_scaled, self.nes_scaled)


"""
    Worker Pool
    ~~~~~~~~~~~

    Process pool for embarrassingly parallel grids. Worker functions must be
    module-level (picklable); results come back in input order.
"""

import os
from multiprocessing import Pool
from typing import Callable, Iterable, List, TypeVar

from .log import Log


T = TypeVar('T')
R = TypeVar('R')


def available_threads() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


class WorkerPool:
    """ Caps the number of processes for every parallel map in this run """

    THREADS = 0  # 0 = available parallelism

    @classmethod
    def size(cls) -> int:
        threads = cls.THREADS
        if threads is None or threads <= 0:
            threads = available_threads()
        return max(1, threads)

    @classmethod
    def map(cls, func: Callable[[T], R], items: Iterable[T], threads: int = None) -> List[R]:
        array = list(items)
        if threads is None:
            threads = cls.size()
        threads = min(threads, len(array))
        if threads <= 1:
            return [func(item) for item in array]
        Log.debug(msg='[POOL] mapping %d task(s) on %d process(es)' % (len(array), threads))
        with Pool(processes=threads) as pool:
            return pool.map(func, array)

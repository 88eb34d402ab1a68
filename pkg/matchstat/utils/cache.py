
"""
    Memory Cache
    ~~~~~~~~~~~~

    Named pools for values that are expensive to rebuild
    (moment sequences, Painleve solutions).
"""

import threading
import time
from typing import Callable

from aiou.mem import CachePool, CacheManager
from aiou.mem.cache import K, V

from startrek.skywalker import Singleton

from .log import Logging


@Singleton
class SharedCacheManager(Logging):

    LOG_TAG = '[MEM]'

    # computed values never go stale; expiry only bounds memory
    CACHE_EXPIRES = 3600.0

    def __init__(self):
        super().__init__()
        self.__manager = CacheManager()
        self.__lock = threading.RLock()
        self.__next_time = 0

    def get_pool(self, name: str) -> CachePool[K, V]:
        """ get pool with name """
        return self.__manager.get_pool(name=name)

    def purge(self, now: float) -> int:
        """ purge all pools """
        return self.__manager.purge(now=now)

    def fetch(self, name: str, key: K, creator: Callable[[], V]) -> V:
        """ get cached value, or create and cache it """
        now = time.time()
        pool = self.get_pool(name=name)
        value, _ = pool.fetch(key=key, now=now)
        if value is not None:
            return value
        with self.__lock:
            # check again, maybe updated by other threads while waiting the lock
            value, _ = pool.fetch(key=key, now=now)
            if value is not None:
                return value
            value = creator()
            pool.update(key=key, value=value, life_span=self.CACHE_EXPIRES, now=now)
        self.__try_purge(now=now)
        return value

    def __try_purge(self, now: float):
        # try to purge each 5 minutes
        if now < self.__next_time:
            return
        self.__next_time = now + 300
        try:
            count = self.purge(now=now)
            self.debug(msg='purge %d item(s) from cache pools' % count)
        except Exception as error:
            self.error(msg='failed to purge cache: %s' % error)


"""
    Utils
    ~~~~~

    Shared plumbing: logging, config, memory caches, worker pools and files.
"""

from dimsdk import json_encode, json_decode
from startrek.skywalker import Singleton
from startrek.skywalker import Runner

from aiou import Path, TextFile, JSONFile

from .log import Log, Logging
from .cache import SharedCacheManager
from .pool import WorkerPool, available_threads

from .config import Config


__all__ = [

    'json_encode', 'json_decode',

    'Singleton', 'Runner',
    'Path', 'TextFile', 'JSONFile',

    'Log', 'Logging',
    'SharedCacheManager',
    'WorkerPool', 'available_threads',

    'Config',

]

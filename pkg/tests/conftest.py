"""
Shared fixtures.

Long acceptance runs (t up to 160, 10^6 walk samples, n = 8 tables) are
marked `slow` and only run with --runslow.
"""

import pytest

from matchstat.utils import WorkerPool
from matchstat.painleve import solve_hm


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run slow acceptance tests')


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long acceptance run, needs --runslow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow'):
        return
    skip_slow = pytest.mark.skip(reason='needs --runslow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def single_process():
    """ in-process maps; results do not depend on the pool size """
    previous = WorkerPool.THREADS
    WorkerPool.THREADS = 1
    yield
    WorkerPool.THREADS = previous


@pytest.fixture(scope='session')
def hm_solution():
    return solve_hm()


"""
    Command Line Interface
    ~~~~~~~~~~~~~~~~~~~~~~
"""

from .shared import GlobalVariable, RunConfig, SUBCOMMANDS
from .shared import parse_argv, create_config, create_run
from .commands import CommandResult, HANDLERS
from .run import dispatch, main


__all__ = [

    'GlobalVariable', 'RunConfig', 'SUBCOMMANDS',
    'parse_argv', 'create_config', 'create_run',
    'CommandResult', 'HANDLERS',
    'dispatch', 'main',

]

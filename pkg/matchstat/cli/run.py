#! /usr/bin/env python3
# -*- coding: utf-8 -*-

"""
    Command Line
    ~~~~~~~~~~~~

    matchstat <subcommand> [target] [--options]

    Exit codes: 0 success, 2 validation, 3 precision / convergence,
    4 capacity. Errors are reported on stdout as JSON as well.
"""

import sys
from typing import List

from ..utils import Log, Runner
from ..common import MatchstatError, ValidationError
from ..common import create_report, error_report, report_to_json, rows_to_csv

from .shared import GlobalVariable
from .shared import parse_argv, create_config, create_run, write_output, show_help
from .commands import HANDLERS


#
# show logs
#
Log.LEVEL = Log.DEVELOP


DEFAULT_CONFIG = '/etc/matchstat/matchstat.ini'


def _set_level(options: dict):
    if options.get('verbose'):
        Log.LEVEL = Log.DEBUG
    elif options.get('quiet'):
        Log.LEVEL = Log.RELEASE
    else:
        Log.LEVEL = Log.DEVELOP


async def _execute(argv: List[str]) -> int:
    options, args = parse_argv(argv=argv)
    _set_level(options=options)
    if options.get('help'):
        show_help(default_config=DEFAULT_CONFIG)
        return 0
    shared = GlobalVariable()
    config = await create_config(options=options, default_config=DEFAULT_CONFIG)
    run = await create_run(options=options, args=args, config=config)
    await shared.prepare(config=config, run=run)
    Log.info(msg='[CLI] running %s' % run)
    outcome = HANDLERS[run.command](run, config)
    if run.fmt == 'csv':
        if not outcome.has_rows:
            raise ValidationError('%s has no CSV form, use --format json' % run.command)
        text = rows_to_csv(header=outcome.header, rows=outcome.rows, bits=run.prec_bits)
    else:
        report = create_report(command=run.command, params=run.to_dict(), result=outcome.result,
                               prec_bits=run.prec_bits)
        text = report_to_json(report=report)
    await write_output(text=text, output=run.output)
    return 0


async def dispatch(argv: List[str]) -> int:
    """ run one command line; returns the exit code """
    try:
        return await _execute(argv=argv)
    except MatchstatError as error:
        Log.error(msg='[CLI] %s: %s' % (error.error_kind, error))
        info = error.to_dict()
        message = info.pop('message')
        info.pop('error_kind')
        report = error_report(error_kind=error.error_kind, message=message, **info)
        sys.stdout.write(report_to_json(report=report) + '\n')
        sys.stdout.flush()
        return error.exit_code


async def async_main():
    shared = GlobalVariable()
    shared.exit_code = await dispatch(argv=sys.argv[1:])


def main():
    Runner.sync_run(main=async_main())
    sys.exit(GlobalVariable().exit_code)


if __name__ == '__main__':
    main()


"""
    Shared State
    ~~~~~~~~~~~~

    Option parsing, config loading and the process-wide run state.
    Precedence: flag, then --params-json, then MATCHSTAT_THREADS (threads
    only), then the ini file, then built-in defaults.
"""

import getopt
import sys
from typing import Any, Dict, List, Optional, Tuple

from ..utils import Singleton, Log
from ..utils import Path, JSONFile, TextFile
from ..utils import Config, WorkerPool, json_decode
from ..common import ValidationError


SUBCOMMANDS = ('enumerate', 'table', 'cov', 'sample', 'moments', 'det', 'cdf', 'tw', 'tw-table', 'verify', 'walks')

# name -> takes a value
OPTIONS = {
    'help': False, 'verbose': False, 'quiet': False,
    'config': True, 'output': True, 'format': True, 'threads': True, 'params-json': True,
    'prec': True, 'seed': True,
    'n': True, 'nmax': True, 'reps': True,
    't': True, 'k': True, 'j': True, 'l': True, 'm': True, 'N': True,
    'kind': True, 'route': True, 'which': True,
    'x': True, 'xp': True, 'p': True, 'deriv': True,
    'xmin': True, 'xmax': True, 'step': True, 'tgrid': True,
}

FORMATS = ('json', 'csv')
CSV_DEFAULT = ('enumerate', 'tw-table')


class RunConfig:
    """ one validated invocation: subcommand, target, numeric params and output choices """

    def __init__(self, command: str, target: Optional[str], params: Dict[str, Any], prec_bits: int, seed: int,
                 fmt: str, output: Optional[str], threads: int):
        super().__init__()
        assert command in SUBCOMMANDS, 'unknown subcommand: %s' % command
        assert fmt in FORMATS, 'unknown format: %s' % fmt
        self.command = command
        self.target = target
        self.params = params
        self.prec_bits = prec_bits
        self.seed = seed
        self.fmt = fmt
        self.output = output
        self.threads = threads

    def has(self, name: str) -> bool:
        return self.params.get(name) is not None

    def get_string(self, name: str, default: str = None) -> Optional[str]:
        value = self.params.get(name)
        return default if value is None else str(value)

    def get_integer(self, name: str, default: int = None) -> Optional[int]:
        value = self.params.get(name)
        if value is None:
            return default
        return to_integer(name=name, value=value)

    def get_float(self, name: str, default: float = None) -> Optional[float]:
        value = self.params.get(name)
        if value is None:
            return default
        return to_float(name=name, value=value)

    def require_integer(self, name: str) -> int:
        if not self.has(name):
            raise ValidationError('%s needs --%s' % (self.command, name))
        return self.get_integer(name=name)

    def require_float(self, name: str) -> float:
        if not self.has(name):
            raise ValidationError('%s needs --%s' % (self.command, name))
        return self.get_float(name=name)

    def to_dict(self) -> dict:
        info = {}
        if self.target is not None:
            info['target'] = self.target
        # fixed key order, so identical argv gives identical reports
        for name in OPTIONS:
            if name in self.params and self.params[name] is not None:
                info[name] = self.params[name]
        info['prec_bits'] = self.prec_bits
        info['seed'] = self.seed
        return info

    def __repr__(self) -> str:
        clazz = self.__class__.__name__
        return '<%s command=%s target=%s fmt=%s output=%s />' % (clazz, self.command, self.target, self.fmt,
                                                                 self.output)


@Singleton
class GlobalVariable:

    def __init__(self):
        super().__init__()
        self.__config: Optional[Config] = None
        self.__run: Optional[RunConfig] = None
        self.exit_code = 0

    @property
    def config(self) -> Config:
        return self.__config

    @property
    def run(self) -> RunConfig:
        return self.__run

    async def prepare(self, config: Config, run: RunConfig):
        self.__config = config
        self.__run = run
        WorkerPool.THREADS = run.threads


def to_integer(name: str, value: Any) -> int:
    try:
        number = float(value)
        if number != int(number):
            raise ValueError('not an integer')
        return int(number)
    except (TypeError, ValueError):
        raise ValidationError('--%s must be an integer: %s' % (name, value))


def to_float(name: str, value: Any) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ValidationError('--%s must be a number: %s' % (name, value))


def parse_argv(argv: List[str]) -> Tuple[Dict[str, Any], List[str]]:
    longopts = [name + '=' if takes else name for name, takes in OPTIONS.items()]
    try:
        opts, args = getopt.gnu_getopt(args=argv, shortopts='hvq', longopts=longopts)
    except getopt.GetoptError as error:
        raise ValidationError(str(error))
    options = {}
    for opt, arg in opts:
        if opt in ('-h', '--help'):
            options['help'] = True
        elif opt in ('-v', '--verbose'):
            options['verbose'] = True
        elif opt in ('-q', '--quiet'):
            options['quiet'] = True
        else:
            options[opt[2:]] = arg
    return options, args


async def load_params_json(value: str) -> Dict[str, Any]:
    """ inline JSON object, or the path of a JSON file """
    text = value.strip()
    if text.startswith('{'):
        try:
            info = json_decode(string=text)
        except ValueError as error:
            raise ValidationError('--params-json is not valid JSON: %s' % error)
    elif await Path.exists(path=text):
        info = await JSONFile(path=text).read()
    else:
        raise ValidationError('--params-json file not found: %s' % text)
    if not isinstance(info, dict):
        raise ValidationError('--params-json must be a JSON object')
    return info


async def create_config(options: Dict[str, Any], default_config: str) -> Config:
    """ load config; a missing default file means built-in defaults """
    ini_file = options.get('config')
    if ini_file is None:
        if await Path.exists(path=default_config):
            ini_file = default_config
        else:
            Log.debug(msg='[CLI] no config at %s, using defaults' % default_config)
            return Config.load()
    elif not await Path.exists(path=ini_file):
        raise ValidationError('config file not exists: %s' % ini_file)
    config = Config.load(file=ini_file)
    Log.info(msg='[CLI] init with config: %s => %s' % (ini_file, config))
    return config


async def create_run(options: Dict[str, Any], args: List[str], config: Config) -> RunConfig:
    if len(args) == 0:
        raise ValidationError('missing subcommand (expected one of %s)' % ', '.join(SUBCOMMANDS))
    command = args[0]
    if command not in SUBCOMMANDS:
        raise ValidationError('unknown subcommand: %s (expected one of %s)' % (command, ', '.join(SUBCOMMANDS)))
    if len(args) > 2:
        raise ValidationError('unexpected arguments: %s' % ' '.join(args[2:]))
    target = args[1] if len(args) == 2 else None
    # params-json first, flags override
    params: Dict[str, Any] = {}
    if options.get('params-json') is not None:
        params.update(await load_params_json(value=options['params-json']))
    for name, value in options.items():
        if name in ('help', 'verbose', 'quiet', 'config', 'params-json'):
            continue
        params[name] = value
    json_target = params.pop('target', None)
    if target is None and json_target is not None:
        target = str(json_target)
    unknown = [name for name in params if name not in OPTIONS]
    if unknown:
        raise ValidationError('unknown parameter(s): %s' % ', '.join(sorted(unknown)))
    prec_bits = to_integer(name='prec', value=params.get('prec', config.precision_bits))
    if prec_bits < 53:
        raise ValidationError('--prec must be >= 53: %d' % prec_bits)
    seed = to_integer(name='seed', value=params.get('seed', 0))
    if seed < 0:
        raise ValidationError('--seed must be >= 0: %d' % seed)
    threads = params.get('threads')
    threads = config.threads if threads is None else to_integer(name='threads', value=threads)
    if threads < 0:
        raise ValidationError('--threads must be >= 0: %d' % threads)
    output = params.get('output')
    fmt = params.get('format')
    if fmt is None:
        if output is not None and str(output).lower().endswith('.csv'):
            fmt = 'csv'
        elif output is not None and str(output).lower().endswith('.json'):
            fmt = 'json'
        else:
            fmt = 'csv' if command in CSV_DEFAULT else 'json'
    if fmt not in FORMATS:
        raise ValidationError('--format must be json or csv: %s' % fmt)
    for name in ('prec', 'seed', 'threads', 'output', 'format'):
        params.pop(name, None)
    return RunConfig(command=command, target=target, params=params, prec_bits=prec_bits, seed=seed, fmt=fmt,
                     output=output, threads=threads)


async def write_output(text: str, output: Optional[str]):
    if not text.endswith('\n'):
        text += '\n'
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    elif not await TextFile(path=output).write(text=text):
        raise ValidationError('failed to write output: %s' % output)


def show_help(default_config: str):
    cmd = sys.argv[0]
    print('')
    print('    Crossings and nestings of random matchings')
    print('')
    print('usages:')
    print('    %s [--config=<FILE>] enumerate --n <N>' % cmd)
    print('    %s [--config=<FILE>] table --n <N>' % cmd)
    print('    %s [--config=<FILE>] cov (--n <N> | --nmax <N> | --t <T> [--route det|poisson])' % cmd)
    print('    %s [--config=<FILE>] sample --n <N> [--reps <R>] [--seed <S>]' % cmd)
    print('    %s [--config=<FILE>] moments --kind discrete|continuous|transition --t <T> --l <L> [--m <M>]' % cmd)
    print('    %s [--config=<FILE>] det --kind discrete|continuous --t <T> --j <J> [--k <K>] [--l <L>]' % cmd)
    print('    %s [--config=<FILE>] cdf joint|nes|lt --t <T> [--k <K>] [--j <J>] [--l <L>] [--route det|prop1|poisson]'
          % cmd)
    print('    %s [--config=<FILE>] tw --which goe|gue --x <X> [--deriv 0|1|2] [--p <P>]' % cmd)
    print('    %s [--config=<FILE>] tw-table --xmin <X> --xmax <X> --step <H>' % cmd)
    print('    %s [--config=<FILE>] verify thm11|thm13|thm15|prop62|prop63|cor12 [--tgrid T1,T2,..] [--x X] [--xp X]'
          % cmd)
    print('    %s [--config=<FILE>] walks --t <T> --N <N> --reps <R> [--seed <S>]' % cmd)
    print('    %s [-h|--help]' % cmd)
    print('')
    print('optional arguments:')
    print('    --config        config file path (default: "%s")' % default_config)
    print('    --output        write the report to a file (.json or .csv)')
    print('    --format        json or csv')
    print('    --prec          working precision in bits')
    print('    --seed          random seed (default: 0)')
    print('    --threads       worker processes (default: MATCHSTAT_THREADS or all cores)')
    print('    --params-json   parameters as a JSON object or a JSON file; flags win')
    print('    --verbose, -v   show debug logs')
    print('    --quiet, -q     show warnings and errors only')
    print('    --help, -h      show this help message and exit')
    print('')

"""
Command line tests: argv in, exit code and report out.
"""

import asyncio
import csv
import io
import json

import pytest
from pytest import approx

from matchstat.cli import dispatch, parse_argv, create_run, GlobalVariable, SUBCOMMANDS
from matchstat.common import ValidationError, SCHEMA_VERSION
from matchstat.utils import Config


def _run(capsys, *argv):
    code = asyncio.run(dispatch(argv=['--threads', '1', '-q'] + list(argv)))
    return code, capsys.readouterr().out


def _json(capsys, *argv):
    code, out = _run(capsys, *argv)
    return code, json.loads(out)


def _create_run(*argv):
    options, args = parse_argv(argv=list(argv))
    return asyncio.run(create_run(options=options, args=args, config=Config.load()))


class TestReports:
    def test_cov(self, capsys):
        code, report = _json(capsys, 'cov', '--n', '2')
        assert code == 0
        assert report['schema'] == SCHEMA_VERSION
        assert report['command'] == 'cov'
        assert report['result']['covariance'] == '-1/9'
        assert float(report['result']['correlation']) == approx(-0.5)
        assert report['params']['n'] == '2'

    def test_cov_rows_as_csv(self, capsys):
        code, out = _run(capsys, 'cov', '--nmax', '3', '--format', 'csv')
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ['2n', 'count', 'covariance', 'correlation']
        assert rows[1][:3] == ['4', '3', '-1/9']
        assert len(rows) == 3

    def test_joint_cdf_at_zero(self, capsys):
        code, report = _json(capsys, 'cdf', 'joint', '--t', '0', '--k', '3', '--j', '3')
        assert code == 0
        result = report['result']
        assert float(result['value_decimal']) == approx(1.0)
        assert result['route'] == 'det'
        assert report['params']['target'] == 'joint'

    def test_nes_cdf_routes_agree(self, capsys):
        _, det = _json(capsys, 'cdf', 'nes', '--t', '1.5', '--j', '2')
        _, flow = _json(capsys, 'cdf', 'nes', '--t', '1.5', '--j', '2', '--route', 'prop1')
        assert flow['result']['route'] == 'prop1'
        assert float(flow['result']['value_decimal']) == approx(float(det['result']['value_decimal']), abs=1e-6)

    def test_poisson_route_joint_only(self, capsys):
        code, report = _json(capsys, 'cdf', 'lt', '--t', '1', '--l', '2', '--route', 'poisson')
        assert code == 2
        assert report['error_kind'] == 'validation'

    def test_moments(self, capsys):
        code, report = _json(capsys, 'moments', '--kind', 'continuous', '--t', '1', '--l', '0', '--prec', '64')
        assert code == 0
        assert float(report['result']['value_decimal']) == approx(2.2795853023360673)
        assert report['prec_bits'] == 64

    def test_det(self, capsys):
        code, report = _json(capsys, 'det', '--kind', 'discrete', '--t', '1', '--j', '2', '--k', '2')
        assert code == 0
        assert report['result']['m'] == '5'
        assert report['result']['certificate']['passed'] is True

    def test_table(self, capsys):
        code, report = _json(capsys, 'table', '--n', '2', '--format', 'json')
        assert code == 0
        assert report['result']['total'] == '3'
        assert report['result']['check'] is True


class TestCsv:
    def test_enumerate_defaults_to_csv(self, capsys):
        code, out = _run(capsys, 'enumerate', '--n', '2')
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ['matching', 'cro', 'nes']
        assert sorted(rows[1:]) == sorted([['{(1,2),(3,4)}', '1', '1'],
                                           ['{(1,3),(2,4)}', '2', '1'],
                                           ['{(1,4),(2,3)}', '1', '2']])

    def test_no_csv_form(self, capsys):
        code, report = _json(capsys, 'cdf', 'nes', '--t', '1', '--j', '1', '--format', 'csv')
        assert code == 2
        assert 'csv' in report['message'].lower()

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / 'cov.json'
        code, out = _run(capsys, 'cov', '--n', '3', '--output', str(target))
        assert code == 0
        assert out == ''
        report = json.loads(target.read_text())
        assert report['result']['n'] == '3'

    def test_output_suffix_picks_csv(self, capsys, tmp_path):
        target = tmp_path / 'table.csv'
        code, _ = _run(capsys, 'table', '--n', '2', '--output', str(target))
        assert code == 0
        assert target.read_text().splitlines()[0] == 'k,j,g'


class TestParams:
    def test_inline_json(self, capsys):
        code, report = _json(capsys, 'cov', '--params-json', '{"n": 2}')
        assert code == 0
        assert report['result']['covariance'] == '-1/9'

    def test_json_file(self, capsys, tmp_path):
        path = tmp_path / 'params.json'
        path.write_text('{"target": "lt", "t": 0.5, "l": 0}')
        code, report = _json(capsys, 'cdf', '--params-json', str(path))
        assert code == 0
        assert report['result']['which'] == 'lt'

    def test_flags_win(self, capsys):
        code, report = _json(capsys, 'cov', '--params-json', '{"n": 3}', '--n', '2')
        assert code == 0
        assert report['result']['n'] == '2'

    def test_unknown_key(self, capsys):
        code, report = _json(capsys, 'cov', '--params-json', '{"n": 2, "bogus": 1}')
        assert code == 2
        assert 'bogus' in report['message']

    def test_bad_json(self, capsys):
        code, report = _json(capsys, 'cov', '--params-json', '{"n": ')
        assert code == 2

    def test_config_file(self, capsys, tmp_path):
        ini = tmp_path / 'matchstat.ini'
        ini.write_text('[precision]\nbits = 128\n')
        code, report = _json(capsys, '--config', str(ini), 'cov', '--n', '2')
        assert code == 0
        assert report['prec_bits'] == 128

    def test_missing_config(self, capsys, tmp_path):
        code, report = _json(capsys, '--config', str(tmp_path / 'missing.ini'), 'cov', '--n', '2')
        assert code == 2


class TestErrors:
    def test_unknown_subcommand(self, capsys):
        code, report = _json(capsys, 'frobnicate')
        assert code == 2
        assert report['schema'] == SCHEMA_VERSION
        assert report['error_kind'] == 'validation'

    def test_missing_subcommand(self, capsys):
        code, report = _json(capsys)
        assert code == 2

    def test_missing_parameter(self, capsys):
        code, report = _json(capsys, 'cov', '--format', 'json')
        assert code == 2
        assert '--n' in report['message']

    def test_not_an_integer(self, capsys):
        code, report = _json(capsys, 'table', '--n', '2.5')
        assert code == 2

    def test_capacity(self, capsys):
        code, report = _json(capsys, 'table', '--n', '12', '--format', 'json')
        assert code == 4
        assert report['error_kind'] == 'capacity'

    def test_unknown_option(self, capsys):
        code, report = _json(capsys, 'cov', '--frob', '1')
        assert code == 2

    def test_help(self, capsys):
        code, out = _run(capsys, '--help')
        assert code == 0
        assert 'usages:' in out


class TestRunConfig:
    def test_sample_is_reproducible(self, capsys):
        _, first = _run(capsys, 'sample', '--n', '20', '--seed', '5')
        _, second = _run(capsys, 'sample', '--n', '20', '--seed', '5')
        assert first == second
        assert json.loads(first)['params']['seed'] == '5'

    def test_defaults(self):
        run = _create_run('enumerate', '--n', '3')
        assert run.command == 'enumerate'
        assert run.fmt == 'csv'
        assert run.seed == 0
        assert run.prec_bits == 256
        assert run.output is None

    def test_param_order(self):
        run = _create_run('cdf', 'joint', '--j', '2', '--t', '1', '--k', '3')
        assert list(run.to_dict()) == ['target', 't', 'k', 'j', 'prec_bits', 'seed']

    def test_low_precision_rejected(self):
        with pytest.raises(ValidationError):
            _create_run('cov', '--n', '2', '--prec', '32')

    def test_negative_seed_rejected(self):
        with pytest.raises(ValidationError):
            _create_run('sample', '--n', '2', '--seed', '-1')

    def test_global_variable(self, capsys):
        _run(capsys, 'cov', '--n', '2')
        shared = GlobalVariable()
        assert shared is GlobalVariable()
        assert shared.run.command == 'cov'
        assert shared.run.threads == 1

    def test_subcommands(self):
        assert 'walks' in SUBCOMMANDS and 'verify' in SUBCOMMANDS

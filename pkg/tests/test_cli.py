# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

try:
    import unittest.mock as mock
except ImportError:
    import mock
import json
from click.testing import CliRunner
from jacobiseq import exceptions
from jacobiseq.cli import cli


W_E = '++-*-*---*-*--+*+*+++*+*'


# Helpers

def invoke(*args):
    return CliRunner().invoke(cli, list(args))


def record(result):
    return json.loads(result.output.splitlines()[0])


# Tests

def test_cli_version():
    result = invoke('--version')
    assert result.exit_code == 0
    assert len(result.output.split('.')) == 3


def test_cli_expand():
    result = invoke('expand', '--number', 'e', '--terms', '10')
    assert result.exit_code == 0
    assert result.output.splitlines() == ['2,1,2,1,1,4,1,1,6,1', '2,1,2,1,1,4,1,1,2,1']


def test_cli_expand_parameterized():
    result = invoke('expand', '--number', 'coth', '--param', '1', '--terms', '4')
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '1,3,5,7'


def test_cli_expand_json():
    result = invoke('expand', '--number', 'e', '--terms', '3', '--json')
    assert record(result) == {'number': 'e', 'digits': [2, 1, 2], 'representative': [2, 1, 2]}


def test_cli_jacobi():
    result = invoke('jacobi', '--number', 'e', '--terms', '24')
    assert result.exit_code == 0
    assert result.output.strip() == W_E


def test_cli_jacobi_is_default_command():
    result = invoke('--number', 'e2', '--terms', '2')
    assert result.exit_code == 0
    assert result.output.strip() == '+*'


def test_cli_jacobi_explicit_digits():
    result = invoke('jacobi', '--digits', '1,1,1,1,1')
    assert result.exit_code == 0
    assert result.output.strip() == '++*--'


def test_cli_jacobi_both_engines():
    result = invoke('jacobi', '--number', 'e', '--terms', '48', '--engine', 'both', '--json')
    assert result.exit_code == 0
    assert record(result) == {'number': 'e', 'terms': 48, 'engine': 'both', 'symbols': W_E * 2}


@mock.patch('jacobiseq.cli.jacobi_sequence', autospec=True)
def test_cli_jacobi_engine_mismatch(jacobi_sequence_mock):
    jacobi_sequence_mock.side_effect = exceptions.EngineMismatchError(index=3, oracle='+', fast='-')
    result = invoke('jacobi', '--number', 'e', '--engine', 'both')
    assert result.exit_code == 3
    assert 'engine-mismatch' in result.output


def test_cli_jacobi_unknown_stream():
    result = invoke('jacobi', '--number', 'pi')
    assert result.exit_code == 2
    assert 'unknown-stream' in result.output


def test_cli_jacobi_needs_one_number():
    result = invoke('jacobi', '--number', 'e', '--digits', '1,2')
    assert result.exit_code == 2


def test_cli_jacobi_finite_stream_exhausted():
    result = invoke('jacobi', '--digits', '1,2,3', '--terms', '5')
    assert result.exit_code == 2
    assert 'stream-exhausted' in result.output


def test_cli_period():
    result = invoke('period', '--number', 'e')
    assert result.exit_code == 0
    descriptor = record(result)
    assert descriptor['length'] == 24
    assert descriptor['pure'] is True
    assert descriptor['period'] == W_E
    assert descriptor['certificate']['L'] == 24


def test_cli_period_digits_periodic():
    result = invoke('period', '--digits-periodic', '1,2,2')
    assert result.exit_code == 0
    assert record(result)['length'] == 36


def test_cli_period_pre_and_period():
    result = invoke('period', '--pre', '1,1,2', '--period', '4')
    assert result.exit_code == 0
    descriptor = record(result)
    assert (descriptor['pre_period'], descriptor['period']) == ('+', '+-')


def test_cli_period_warnings():
    result = invoke('period', '--digits-periodic', '1,2,2,2')
    assert result.exit_code == 0
    assert record(result)['length'] == 8
    assert 'Warning: L=8 is a period of {1,2,2,2}' in result.output


def test_cli_period_unsupported_stream():
    result = invoke('period', '--digits', '1,2,3')
    assert result.exit_code == 2


def test_cli_verify():
    result = invoke('verify', '--period', '1,2,1,1,4,1', '--L', '24')
    assert result.exit_code == 0
    certificate = record(result)
    assert certificate['ok'] is True
    assert certificate['matrix'] == [[9286113, 7622528], [6669712, 5474849]]
    assert certificate['matrix_mod4'] == [[1, 0], [0, 1]]


def test_cli_verify_fails_without_error():
    result = invoke('verify', '--period', '1,2,1,1,4,1', '--L', '6')
    assert result.exit_code == 0
    assert record(result)['ok'] is False


def test_cli_verify_odd_length():
    result = invoke('verify', '--period', '1,2,1,1,4,1', '--L', '9')
    assert result.exit_code == 2


def test_cli_construct_theorem8():
    result = invoke('construct', '--theorem', '8', '--L', '2')
    assert result.exit_code == 0
    construction = record(result)
    assert construction['construction'] == 'theorem8'
    assert construction['digits'] == '{4}'
    assert construction['period']['period'] == '+*'


def test_cli_construct_theorem3_gaps():
    result = invoke('construct', '--theorem', '3', '--gaps', '6', '--terms', '30')
    assert result.exit_code == 0
    construction = record(result)
    assert construction['symbols'] == '+' * 30
    assert construction['digits'] == '1,1,4,4,4,{2,4,2,4,4,4}'
    assert construction['period']['period'] == '+'


def test_cli_construct_theorem3_growing_gaps():
    result = invoke('construct', '--theorem', '3', '--gaps', 'start=6,delta=2', '--terms', '12')
    assert result.exit_code == 0
    construction = record(result)
    assert construction['digits'] == '1,1,4,4,4,2,4,2,4,4,4,4'
    assert construction['period'] is None


def test_cli_construct_theorem7_odd_length():
    result = invoke('construct', '--theorem', '7', '--L', '5')
    assert result.exit_code == 2
    assert 'considerably more complicated' in result.output


def test_cli_construct_invalid_gaps():
    result = invoke('construct', '--theorem', '7', '--gaps', '5')
    assert result.exit_code == 2
    assert 'invalid-gaps' in result.output


def test_cli_scan_word():
    result = invoke('scan', '--word=-++-')
    assert result.exit_code == 0
    findings = record(result)
    assert [finding['code'] for finding in findings] == ['forbidden-pattern']


def test_cli_scan_word_with_unknown_characters():
    result = invoke('scan', '--word=abcd')
    assert result.exit_code == 2
    assert 'domain-error' in result.output


def test_cli_scan():
    result = invoke('scan', '--max-len', '5')
    assert result.exit_code == 0
    report = record(result)
    assert report['hits'] == 0
    assert report['near_misses'] == 4


def test_cli_surd():
    result = invoke('surd', '--digits-periodic', '1')
    assert result.exit_code == 0
    assert result.output.strip() == '(1+sqrt(5))/2'


def test_cli_surd_json():
    result = invoke('surd', '--pre', '1,1', '--period', '4', '--json')
    assert result.exit_code == 0
    assert record(result) == {'number': '1,1,{4}', 'P': 5, 'D': 5, 'Q': 4}


def test_cli_surd_needs_periodic_stream():
    result = invoke('surd', '--number', 'e')
    assert result.exit_code == 2


def test_cli_congruent():
    result = invoke('congruent', 'e', '2,{1,2,1,1,4,1}', '--terms', '30')
    assert result.exit_code == 0
    assert result.output.strip() == 'congruent'


def test_cli_congruent_differs():
    result = invoke('congruent', 'coth:1', 'coth:3', '--terms', '4', '--json')
    assert result.exit_code == 0
    assert record(result)['congruent'] is False


def test_cli_transducer():
    result = invoke('transducer')
    assert result.exit_code == 0
    table = record(result)
    assert table['states'] == 192
    assert table['closed'] is True
    assert len(table['transitions']) == 768


def test_cli_period_e_squared():
    result = invoke('period', '--number', 'e2')
    assert result.exit_code == 0
    descriptor = record(result)
    assert descriptor['length'] == 40
    assert descriptor['pure'] is True


def test_cli_expand_echoes_digits():
    result = invoke('expand', '--digits', '1,1,1', '--terms', '3')
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == '1,1,1'

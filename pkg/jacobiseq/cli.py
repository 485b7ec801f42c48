# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from sys import exit

import click
import functools
from click_default_group import DefaultGroup
from .helpers import build_stream, parse_digits, parse_number, dumps
from .digits import FiniteStream, PeriodicStream, format_digits, format_periodic
from .sequences import jacobi_sequence, four_representative, congruent_mod4
from .transducer import build_transducer
from .periodicity import detect_period, verify_certificate
from .constructions.gaps import GapSequence
from .scanner import scan_exhaustive, scan_forbidden, scan_near_misses
from .surds import eval_eventually_periodic
from .registry import registry
from .jacobi import format_word
from . import exceptions
from . import config
click.disable_unicode_literals_warning = True


# Module API

class RunConfig(object):
    """Options shared by the commands of one invocation

    # Arguments
        command (str): the command name.
        number (DigitStream): the stream the command works on, if any.
        terms (int): number of terms.
        engine (str): `oracle`, `fast` or `both`.
        output (str): `text` or `json`.
        file (file): where records are written.

    """

    def __init__(self, command, number=None, terms=None, engine='oracle', output='text', file=None):
        if engine not in ('oracle', 'fast', 'both'):
            raise exceptions.DomainError('Unknown engine "%s"' % engine)
        self.command = command
        self.number = number
        self.terms = _resolve_terms(number, terms)
        self.engine = engine
        self.output = output
        self.file = file

    def emit(self, record, text=None):
        if self.output == 'json' or text is None:
            click.secho(dumps(record), file=self.file)
        else:
            click.secho(text, file=self.file)


@click.group(cls=DefaultGroup, default='jacobi', default_if_no_args=False, help='')
@click.version_option(config.VERSION, message='%(version)s')
def cli():
    """Command-line interface

    ```
    Usage: jacobiseq [OPTIONS] COMMAND [ARGS]...

    Options:
      --version  Show the version and exit.
      --help     Show this message and exit.

    Commands:
      jacobi*     Print the Jacobi sequence of a number (default).
      expand      Print digits and their 4-representative.
      period      Detect the Jacobi period of an eventually periodic number.
      construct   Build the stream of a constructive theorem.
      scan        Scan for the forbidden patterns -++- and +--+.
      verify      Check the certificate conditions for an even period L.
      surd        Evaluate an eventually periodic continued fraction.
      congruent   Compare two numbers digit by digit mod 4.
      transducer  Export the synthesized transducer.
    ```

    """
    pass


def number_options(func):
    options = [
        click.option('--number', '-n', help='Named constant: e, e_inv_n, e2 or coth.'),
        click.option('--param', type=int, help='Parameter n of e_inv_n and coth.'),
        click.option('--digits', help='Explicit digits, e.g. 1,1,1.'),
        click.option('--digits-periodic', help='Periodic digits, e.g. 1,2,2 or 2,{1,2,1,1,4,1}.'),
        click.option('--pre', help='Pre-period digits (with --period).'),
        click.option('--period', help='Period digits.'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def output_options(func):
    options = [
        click.option('--json', is_flag=True, help='Output as JSON lines.'),
        click.option(
            '--output', '--out', '-o',
            type=click.File('w'),
            default='-',
            help='Redirect output to a file.'
        ),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def handle_errors(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except exceptions.JacobiSeqException as exception:
            click.secho('Error [%s]: %s' % (exception.code, exception.message), err=True, fg='red')
            exit(exception.exit_code)
    return wrapper


@cli.command(short_help='Print the Jacobi sequence of a number (default).')
@number_options
@click.option('--terms', '-t', type=int, help='Number of terms.')
@click.option(
    '--engine',
    type=click.Choice(['oracle', 'fast', 'both']),
    default='oracle',
    help='Big-integer oracle, transducer, or both compared.'
)
@click.option('--witness-depth', type=int, default=config.DEFAULT_WITNESS_DEPTH)
@output_options
@handle_errors
def jacobi(terms, engine, witness_depth, json, output, **spec):
    run = RunConfig(
        'jacobi', build_stream(**spec), terms, engine,
        output='json' if json else 'text', file=output)
    table = None
    if run.engine != 'oracle':
        table = build_transducer(witness_depth)
    symbols = format_word(jacobi_sequence(run.number, run.terms, table=table, engine=run.engine))
    run.emit({
        'number': run.number.name,
        'terms': run.terms,
        'engine': run.engine,
        'symbols': symbols,
    }, text=symbols)


@cli.command(short_help='Print digits and their 4-representative.')
@number_options
@click.option('--terms', '-t', type=int, help='Number of terms.')
@output_options
@handle_errors
def expand(terms, json, output, **spec):
    run = RunConfig(
        'expand', build_stream(**spec), terms,
        output='json' if json else 'text', file=output)
    digits = run.number.digits(run.terms)
    representative = four_representative(run.number, run.terms)
    run.emit({
        'number': run.number.name,
        'digits': digits,
        'representative': representative,
    }, text='%s\n%s' % (format_digits(digits), format_digits(representative)))


@cli.command(short_help='Detect the Jacobi period of an eventually periodic number.')
@number_options
@click.option('--witness-depth', type=int, default=config.DEFAULT_WITNESS_DEPTH)
@output_options
@handle_errors
def period(witness_depth, json, output, **spec):
    run = RunConfig('period', build_stream(**spec), output='json', file=output)
    descriptor = detect_period(run.number, build_transducer(witness_depth))
    record = descriptor.to_dict()
    record['number'] = run.number.name
    run.emit(record)
    for warning in descriptor.warnings:
        click.secho('Warning: %s' % warning, err=True, fg='yellow')


@cli.command(short_help='Build the stream of a constructive theorem.')
@click.option('--theorem', type=click.Choice(sorted(config.THEOREM_CONSTRUCTIONS)), required=True)
@click.option('--gaps', help='Gap positions: 6,6,6 or start=6,delta=2 or start=6,rule=6+2*j.')
@click.option('--L', 'L', type=int, help='Period length.')
@click.option('--terms', '-t', type=int, default=config.DEFAULT_TERMS, help='Number of terms.')
@click.option('--witness-depth', type=int, default=config.DEFAULT_WITNESS_DEPTH)
@output_options
@handle_errors
def construct(theorem, gaps, L, terms, witness_depth, json, output):
    spec = registry.get_construction(theorem)
    gaps = GapSequence.from_text(gaps) if gaps is not None else None
    stream = spec['func'](gaps=gaps, L=L)
    run = RunConfig('construct', stream, terms, output='json', file=output)

    record = {
        'theorem': theorem,
        'construction': spec['name'],
        'number': stream.name,
        'digits': format_digits(stream.digits(run.terms)),
        'symbols': format_word(jacobi_sequence(stream, run.terms)),
        'period': None,
    }
    try:
        form = stream.periodic_form()
    except exceptions.UnsupportedStreamError:
        form = None
    if form is not None:
        record['digits'] = format_periodic(form.pre, form.period)
        record['period'] = detect_period(form, build_transducer(witness_depth)).to_dict()
    run.emit(record)


@cli.command(short_help='Scan for the forbidden patterns -++- and +--+.')
@click.option('--max-len', type=int, default=config.DEFAULT_SCAN_LENGTH, help='Longest digit word.')
@click.option('--workers', type=int, default=config.DEFAULT_WORKERS, help='Worker threads.')
@click.option('--word', help='Scan this symbol word instead, e.g. -++-.')
@click.option('--witness-depth', type=int, default=config.DEFAULT_WITNESS_DEPTH)
@output_options
@handle_errors
def scan(max_len, workers, word, witness_depth, json, output):
    run = RunConfig('scan', output='json', file=output)
    if word is not None:
        findings = scan_forbidden(word) + scan_near_misses(word)
        run.emit([dict(finding) for finding in findings])
        return
    report = scan_exhaustive(build_transducer(witness_depth), max_len, workers)
    run.emit(report)
    for warning in report['warnings']:
        click.secho('Warning: %s' % warning, err=True, fg='yellow')


@cli.command(short_help='Check the certificate conditions for an even period L.')
@click.option('--period', required=True, help='Period digits, e.g. 1,2,1,1,4,1.')
@click.option('--L', 'L', type=int, required=True, help='Even multiple of the period length.')
@output_options
@handle_errors
def verify(period, L, json, output):
    run = RunConfig('verify', output='json', file=output)
    run.emit(verify_certificate(parse_digits(period), L).to_dict())


@cli.command(short_help='Evaluate an eventually periodic continued fraction.')
@number_options
@output_options
@handle_errors
def surd(json, output, **spec):
    run = RunConfig('surd', build_stream(**spec), output='json' if json else 'text', file=output)
    if run.number.kind != PeriodicStream.kind:
        raise exceptions.UnsupportedStreamError(stream=run.number.name)
    value = eval_eventually_periodic(list(run.number.pre), list(run.number.period))
    record = value.to_dict()
    record['number'] = run.number.name
    run.emit(record, text=str(value))


@cli.command(short_help='Compare two numbers digit by digit mod 4.')
@click.argument('first')
@click.argument('second')
@click.option('--terms', '-t', type=int, default=config.DEFAULT_TERMS, help='Number of terms.')
@output_options
@handle_errors
def congruent(first, second, terms, json, output):
    x, y = parse_number(first), parse_number(second)
    run = RunConfig('congruent', x, terms, output='json' if json else 'text', file=output)
    result = congruent_mod4(x, y, run.terms)
    run.emit({
        'first': x.name,
        'second': y.name,
        'terms': run.terms,
        'congruent': result,
    }, text='congruent' if result else 'not congruent')


@cli.command(short_help='Export the synthesized transducer.')
@click.option('--witness-depth', type=int, default=config.DEFAULT_WITNESS_DEPTH)
@output_options
@handle_errors
def transducer(witness_depth, json, output):
    run = RunConfig('transducer', output='json', file=output)
    table = build_transducer(witness_depth)
    run.emit({
        'states': len(table.states),
        'closed': table.is_closed(),
        'transitions': table.to_json(),
    })


# Internal

def _resolve_terms(number, terms):
    if terms is None:
        if isinstance(number, FiniteStream):
            return len(number)
        return config.DEFAULT_TERMS
    if terms < 1:
        raise exceptions.PreconditionError('At least one term is required, got %s' % terms)
    return terms


# Main

if __name__ == "__main__":
    cli()

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import json
from .digits import FiniteStream, PeriodicStream
from .named import named_stream
from . import exceptions


# Module API

def parse_digits(text):
    """Parse `1,2,3` into a list of integers."""
    text = text.strip()
    if not text:
        return []
    digits = []
    for index, token in enumerate(text.split(',')):
        try:
            digits.append(int(token))
        except ValueError:
            raise exceptions.InvalidDigitError(digit=token.strip(), index=index)
    return digits


def parse_periodic(text):
    """Parse `2,{1,2,1,1,4,1}` (or a bare period `1,2,2`) into (pre, period)."""
    text = text.strip()
    if '{' not in text:
        return [], parse_digits(text)
    head, _, rest = text.partition('{')
    body, _, tail = rest.partition('}')
    if tail.strip():
        raise exceptions.PreconditionError('Nothing may follow the period in "%s"' % text)
    return parse_digits(head.rstrip(', ')), parse_digits(body)


def build_stream(number=None, param=None, digits=None, digits_periodic=None, pre=None, period=None):
    """Digit stream from exactly one number option

    # Arguments
        number (str): a registered stream name, with `param` if needed.
        digits (str): explicit finite digits `1,2,3`.
        digits_periodic (str): `{period}` or `pre,{period}`.
        pre, period (str): pre-period and period given separately.

    # Raises
        PreconditionError: no number option, or more than one.

    """
    given = [
        name for name, value in [
            ('--number', number),
            ('--digits', digits),
            ('--digits-periodic', digits_periodic),
            ('--period', period),
        ] if value is not None]
    if len(given) != 1:
        message = 'Give exactly one of --number, --digits, --digits-periodic or --pre/--period'
        raise exceptions.PreconditionError(message)
    if pre is not None and period is None:
        raise exceptions.PreconditionError('--pre needs --period')
    if param is not None and number is None:
        raise exceptions.PreconditionError('--param only applies to --number')

    if number is not None:
        return named_stream(number, param)
    if digits is not None:
        return FiniteStream(parse_digits(digits))
    if digits_periodic is not None:
        return PeriodicStream(*parse_periodic(digits_periodic))
    return PeriodicStream(parse_digits(pre or ''), parse_digits(period))


def dumps(record):
    """Serialize a record as one JSON line, integers in full."""
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def parse_number(text):
    """Stream from a compact spec: `e`, `coth:3`, `1,2,3` or `2,{1,2,1,1,4,1}`."""
    text = text.strip()
    if '{' in text:
        return PeriodicStream(*parse_periodic(text))
    if text[:1].isdigit():
        return FiniteStream(parse_digits(text))
    name, _, param = text.partition(':')
    if param:
        try:
            param = int(param)
        except ValueError:
            raise exceptions.DomainError('Stream parameter "%s" is not an integer' % param)
        return named_stream(name, param)
    return named_stream(name)

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import pytest
from jacobiseq import exceptions
from jacobiseq.digits import FiniteStream, PeriodicStream, RuleStream
from jacobiseq.digits import digit_class, validate_digit, format_periodic


# Finite

def test_finite_stream():
    stream = FiniteStream([1, 2, 3])
    assert stream.digits(3) == [1, 2, 3]
    assert len(stream) == 3
    assert stream.name == '1,2,3'
    assert stream.kind == 'explicit-finite'


def test_finite_stream_exhausted():
    with pytest.raises(exceptions.StreamExhaustedError) as excinfo:
        FiniteStream([1, 2, 3]).digit(3)
    assert excinfo.value.message == 'Finite stream of length 3 has no digit at index 3'


def test_finite_stream_has_no_periodic_form():
    with pytest.raises(exceptions.UnsupportedStreamError):
        FiniteStream([1, 2]).periodic_form()


# Periodic

def test_periodic_stream():
    stream = PeriodicStream([2], [1, 2, 1, 1, 4, 1])
    assert stream.digits(10) == [2, 1, 2, 1, 1, 4, 1, 1, 2, 1]
    assert stream.name == '2,{1,2,1,1,4,1}'
    assert not stream.pure
    assert stream.periodic_form() is stream
    assert stream == PeriodicStream([2], [1, 2, 1, 1, 4, 1])


def test_periodic_stream_needs_period():
    with pytest.raises(exceptions.PreconditionError):
        PeriodicStream([1], [])


def test_periodic_stream_digits_index_across_pre_period():
    with pytest.raises(exceptions.InvalidDigitError) as excinfo:
        PeriodicStream([1, 1], [4, 0])
    assert excinfo.value.substitutions == {'digit': 0, 'index': 3}


# Rule

def test_rule_stream():
    stream = RuleStream('squares', None, lambda k: (k + 1) ** 2)
    assert stream.digits(4) == [1, 4, 9, 16]
    assert stream.digits(2, start=3) == [16, 25]
    assert stream.name == 'squares'


def test_rule_stream_negative_index():
    with pytest.raises(exceptions.DomainError):
        RuleStream('ones', None, lambda k: 1).digit(-1)


# Helpers

def test_digit_class():
    assert [digit_class(a) for a in range(1, 10)] == [1, 2, 3, 4, 1, 2, 3, 4, 1]


@pytest.mark.parametrize('digit', [0, -1, 1.5, True, '1'])
def test_validate_digit_rejects(digit):
    with pytest.raises(exceptions.InvalidDigitError):
        validate_digit(digit, 0)


def test_format_periodic():
    assert format_periodic([], [4]) == '{4}'
    assert format_periodic([1, 1], [4, 2]) == '1,1,{4,2}'

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import pytest
from jacobiseq import named_stream, congruent_mod4, exceptions


# Digits

def test_stream_e():
    assert named_stream('e').digits(10) == [2, 1, 2, 1, 1, 4, 1, 1, 6, 1]


def test_stream_e_squared():
    assert named_stream('e_squared').digits(11) == [7, 2, 1, 1, 3, 18, 5, 1, 1, 6, 30]
    assert named_stream('e2').digits(3) == [7, 2, 1]


def test_stream_e_inv_n():
    assert named_stream('e_inv_n', 2).digits(8) == [1, 1, 1, 1, 5, 1, 1, 9]
    assert named_stream('e_inv_n', 3).digits(8) == [1, 2, 1, 1, 8, 1, 1, 14]


def test_stream_coth_family():
    assert named_stream('coth_family', 1).digits(4) == [1, 3, 5, 7]
    assert named_stream('coth', 2).digits(4) == [2, 6, 10, 14]


# Periodic forms

@pytest.mark.parametrize('name, n', [
    ('e', None),
    ('e_squared', None),
    ('e_inv_n', 2),
    ('e_inv_n', 7),
    ('e_inv_n', 12),
    ('coth_family', 1),
    ('coth_family', 6),
])
def test_stream_periodic_form_is_congruent(name, n):
    stream = named_stream(name, n)
    assert congruent_mod4(stream, stream.periodic_form(), 400)


def test_stream_e_periodic_form():
    form = named_stream('e').periodic_form()
    assert (form.pre, form.period) == ((2,), (1, 2, 1, 1, 4, 1))


def test_stream_e_squared_periodic_form():
    form = named_stream('e2').periodic_form()
    assert form.pre == (3,)
    assert form.period == (2, 1, 1, 3, 2, 1, 1, 1, 2, 2, 4, 1, 1, 1, 2, 3, 1, 1, 4, 2)


# Errors

def test_stream_unknown():
    with pytest.raises(exceptions.UnknownStreamError) as excinfo:
        named_stream('pi')
    assert excinfo.value.message == 'Stream "pi" is not registered'


@pytest.mark.parametrize('name, n', [
    ('e', 2),
    ('e_inv_n', None),
    ('e_inv_n', 1),
    ('coth', 0),
    ('coth', 'x'),
])
def test_stream_parameter_errors(name, n):
    with pytest.raises(exceptions.DomainError):
        named_stream(name, n)

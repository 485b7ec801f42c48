# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import random
import pytest
import itertools
from jacobiseq import named_stream, exceptions
from jacobiseq.digits import FiniteStream, PeriodicStream, RuleStream
from jacobiseq.jacobi import format_word, MINUS
from jacobiseq.transducer import ResidueState
from jacobiseq.sequences import jacobi_sequence, jacobi_sequence_oracle, jacobi_sequence_fast
from jacobiseq.sequences import four_representative, congruent_mod4
from jacobiseq.constructions.gaps import GapSequence
from jacobiseq.constructions.constant_plus import theorem3_stream


W_E = '++-*-*---*-*--+*+*+++*+*'


# Oracle

@pytest.mark.parametrize('stream, n, expected', [
    (named_stream('e'), 24, W_E),
    (named_stream('e'), 48, W_E + W_E),
    (named_stream('e2'), 2, '+*'),
    (FiniteStream([1, 1, 1, 1, 1]), 5, '++*--'),
    (PeriodicStream([], [1]), 12, '++*--*--*++*'),
    (PeriodicStream([], [4]), 4, '+*+*'),
])
def test_jacobi_sequence_oracle(stream, n, expected):
    assert format_word(jacobi_sequence_oracle(stream, n)) == expected


def test_jacobi_sequence_oracle_finite_stream_exhausted():
    with pytest.raises(exceptions.StreamExhaustedError):
        jacobi_sequence_oracle(FiniteStream([1, 2]), 3)


def test_jacobi_sequence_needs_one_term():
    with pytest.raises(exceptions.PreconditionError):
        jacobi_sequence_oracle(named_stream('e'), 0)


# Fast

def test_jacobi_sequence_fast(table):
    assert format_word(jacobi_sequence_fast(named_stream('e'), 48, table)) == W_E + W_E


def test_jacobi_sequence_fast_equals_oracle_on_all_short_words(table):
    for word in itertools.product([1, 2, 3, 4], repeat=8):
        stream = FiniteStream(word)
        assert jacobi_sequence_fast(stream, 8, table) == jacobi_sequence_oracle(stream, 8)


def test_jacobi_sequence_fast_equals_oracle_on_random_streams(table):
    generator = random.Random(20160101)
    for _ in range(100):
        stream = FiniteStream([generator.randint(1, 40) for _ in range(2000)])
        assert jacobi_sequence_fast(stream, 2000, table) == jacobi_sequence_oracle(stream, 2000)


def test_jacobi_sequence_fast_rejects_invalid_digit(table):
    with pytest.raises(exceptions.InvalidDigitError):
        jacobi_sequence_fast(RuleStream('zeros', None, lambda k: 0), 3, table)


# Engines

def test_jacobi_sequence_both_engines(table):
    assert format_word(jacobi_sequence(named_stream('e'), 24, table, engine='both')) == W_E


def test_jacobi_sequence_engines_without_table():
    assert format_word(jacobi_sequence(named_stream('e'), 24, engine='fast')) == W_E
    assert format_word(jacobi_sequence(named_stream('e'), 24, engine='both')) == W_E


def test_jacobi_sequence_engine_mismatch():
    state = ResidueState(1, 1, 1, 0, 0, MINUS, MINUS)

    class BrokenTable(object):
        def start(self, digit):
            return state

        def step(self, state, digit):
            return state

    with pytest.raises(exceptions.EngineMismatchError) as excinfo:
        jacobi_sequence(named_stream('e'), 5, BrokenTable(), engine='both')
    assert excinfo.value.substitutions == {'index': 0, 'oracle': '+', 'fast': '-'}
    assert excinfo.value.exit_code == 3


def test_jacobi_sequence_unknown_engine():
    with pytest.raises(exceptions.DomainError):
        jacobi_sequence(named_stream('e'), 5, engine='fastest')


# Residues mod 4

def test_four_representative():
    assert four_representative(named_stream('e'), 10) == [2, 1, 2, 1, 1, 4, 1, 1, 2, 1]


def test_congruent_mod4():
    assert congruent_mod4(named_stream('e'), PeriodicStream([2], [1, 2, 1, 1, 4, 1]), 300)
    assert not congruent_mod4(named_stream('e'), PeriodicStream([], [2, 1, 1]), 3)


def test_congruent_streams_share_jacobi_sequence(table):
    generator = random.Random(42)
    for _ in range(50):
        digits = [generator.randint(1, 20) for _ in range(300)]
        shifted = [a + 4 * generator.randint(0, 5) for a in digits]
        x, y = FiniteStream(digits), FiniteStream(shifted)
        assert congruent_mod4(x, y, 300)
        assert jacobi_sequence_oracle(x, 300) == jacobi_sequence_oracle(y, 300)


def test_equal_jacobi_sequences_without_congruence():
    x = theorem3_stream(GapSequence.constant(6))
    y = theorem3_stream(GapSequence.constant(8))
    assert jacobi_sequence_oracle(x, 500) == jacobi_sequence_oracle(y, 500)
    assert not congruent_mod4(x, y, 500)

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from six.moves import range, zip
from .jacobi import jacobi_symbol
from .convergents import iter_convergents
from .transducer import build_transducer
from .digits import digit_class, validate_digit
from . import exceptions


# Module API

def jacobi_sequence_oracle(stream, n):
    """Jacobi sequence J(s_k/t_k), k = 0 ... n-1, from exact convergents

    Every symbol is computed from scratch from the big integers, with no
    state shared between indices.

    """
    _ensure_count(n)
    symbols = []
    for convergent in iter_convergents(stream):
        symbols.append(jacobi_symbol(convergent.s, convergent.t))
        if len(symbols) == n:
            break
    return symbols


def jacobi_sequence_fast(stream, n, table=None):
    """Jacobi sequence by table lookups on digit classes mod 4

    Without `table`, the transducer is synthesized with default settings.

    # Raises
        IncompleteTableError: a transition is missing from `table`.

    """
    _ensure_count(n)
    if table is None:
        table = build_transducer()
    state = table.start(validate_digit(stream.digit(0), 0))
    symbols = [state.j_st]
    for k in range(1, n):
        state = table.step(state, validate_digit(stream.digit(k), k))
        symbols.append(state.j_st)
    return symbols


def jacobi_sequence(stream, n, table=None, engine='oracle'):
    """Jacobi sequence by the `oracle` engine, the `fast` engine or `both`

    With `both`, the engines are compared symbol by symbol.

    # Raises
        EngineMismatchError: the engines disagree.

    """
    if engine == 'oracle':
        return jacobi_sequence_oracle(stream, n)
    if engine == 'fast':
        return jacobi_sequence_fast(stream, n, table)
    if engine == 'both':
        oracle = jacobi_sequence_oracle(stream, n)
        fast = jacobi_sequence_fast(stream, n, table)
        for index, (expected, actual) in enumerate(zip(oracle, fast)):
            if expected != actual:
                raise exceptions.EngineMismatchError(
                    index=index, oracle=expected.value, fast=actual.value)
        return oracle
    raise exceptions.DomainError('Unknown engine "%s"' % engine)


def four_representative(stream, n):
    """Digits b_k in {1, 2, 3, 4} with b_k = a_k mod 4, k < n."""
    _ensure_count(n)
    return [digit_class(validate_digit(stream.digit(k), k)) for k in range(n)]


def congruent_mod4(x, y, n):
    """True iff a_k = b_k mod 4 for every k < n."""
    _ensure_count(n)
    for k in range(n):
        a = validate_digit(x.digit(k), k)
        b = validate_digit(y.digit(k), k)
        if (a - b) % 4:
            return False
    return True


# Internal

def _ensure_count(n):
    if n < 1:
        raise exceptions.PreconditionError('At least one term is required, got %s' % n)

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from collections import namedtuple
from . import exceptions
from .digits import validate_digit


# Module API

class Convergent(namedtuple('Convergent', ['k', 's', 't'])):
    """Exact convergent s_k/t_k of index k."""
    __slots__ = ()

    def __str__(self):
        return '%s/%s' % (self.s, self.t)


# s_{-2}/t_{-2} = 0/1 and s_{-1}/t_{-1} = 1/0, so the recurrence also yields s_0 = a_0, t_0 = 1
SEEDS = (Convergent(-2, 0, 1), Convergent(-1, 1, 0))


def next_convergent(prev2, prev1, a):
    """Apply s_k = a s_{k-1} + s_{k-2}, t_k = a t_{k-1} + t_{k-2}

    # Raises
        InvalidDigitError: `a` < 1.
        PreconditionError: the two convergents are not consecutive.

    """
    validate_digit(a, prev1.k + 1)
    if prev2.k != prev1.k - 1:
        message = 'Convergents %s and %s are not consecutive' % (prev2.k, prev1.k)
        raise exceptions.PreconditionError(message)
    return Convergent(prev1.k + 1, a * prev1.s + prev2.s, a * prev1.t + prev2.t)


def iter_convergents(stream):
    """Yield the convergents k = 0, 1, 2, ... of a digit stream."""
    prev2, prev1 = SEEDS
    for a in stream:
        prev2, prev1 = prev1, next_convergent(prev2, prev1, a)
        yield prev1


def convergents(stream, n):
    """Convergents k = 0 ... n-1 of a digit stream

    # Arguments
        stream (DigitStream): the partial quotients.
        n (int): number of convergents, at least 1.

    # Returns
        List[Convergent]

    """
    if n < 1:
        raise exceptions.PreconditionError('At least one convergent is required, got %s' % n)
    result = []
    for convergent in iter_convergents(stream):
        result.append(convergent)
        if len(result) == n:
            break
    return result


def convergent_pair(digits):
    """Last two convergents (k = len-2, len-1) of a finite digit list.

    Shorter lists fall back to the seeds, so `[]` gives (s_{-2}, s_{-1}).

    """
    prev2, prev1 = SEEDS
    for a in digits:
        prev2, prev1 = prev1, next_convergent(prev2, prev1, a)
    return prev2, prev1


def determinant(prev, current):
    """s_k t_{k-1} - s_{k-1} t_k, equal to (-1)^(k+1)."""
    return current.s * prev.t - prev.s * current.t

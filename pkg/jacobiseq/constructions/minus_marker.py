# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from ..registry import construction
from ..digits import PeriodicStream
from .gaps import GapSequence, gap_stream
from .. import exceptions


# Module API

@construction('theorem7', theorem='7')
def construct(gaps=None, L=None):
    if gaps is not None:
        return theorem7_stream(gaps)
    if L is None:
        raise exceptions.PreconditionError('Theorem 7 needs a gap sequence or an even period L')
    return theorem7_periodic(L)


def theorem7_stream(gaps):
    """Stream whose Jacobi sequence is -1 exactly at the positions k_j

    a_0 = a_1 = 1, a_k = 2 for k = k_j and k = k_j + 2, a_k = 4 otherwise.

    """
    if not isinstance(gaps, GapSequence):
        raise exceptions.InvalidGapsError('Expected a gap sequence, got %r' % (gaps,))
    return gap_stream('theorem7', gaps, _digit)


def theorem7_periodic(L):
    """Stream with Jacobi period L-1 times +1 followed by -1, L even

    # Raises
        PreconditionError: L is odd or below 2.

    """
    if L < 2:
        raise exceptions.PreconditionError('Period length must be at least 2, got %s' % L)
    if L % 2:
        message = (
            'Odd period lengths are not supported: the construction for '
            'odd L is considerably more complicated, got L=%s' % L)
        raise exceptions.PreconditionError(message)
    if L == 2:
        return PeriodicStream([1, 1, 2], [4])
    if L == 4:
        return PeriodicStream([1, 1, 4], [4, 2])
    return theorem7_stream(GapSequence.constant(L))


# Internal

def _digit(k, gaps):
    if k < 0:
        raise exceptions.DomainError('Digit index must be non-negative, got %s' % k)
    if k < 2:
        return 1
    if k in gaps or (k - 2) in gaps:
        return 2
    return 4

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from six.moves import range
from ..registry import construction
from ..digits import RuleStream, PeriodicStream
from .. import exceptions


# Module API

@construction('theorem8', theorem='8')
def construct(gaps=None, L=None):
    if gaps is not None:
        raise exceptions.PreconditionError('Theorem 8 takes a period L, not a gap sequence')
    if L is None:
        raise exceptions.PreconditionError('Theorem 8 needs a period L')
    return theorem8_stream(L)


def theorem8_stream(L):
    """Stream with Jacobi period L-1 times +1 followed by *

    For L >= 3, a_k = 1 if k = 0, 1 (mod L), a_k = 3 if k = -1 (mod L) and
    a_k = 4 otherwise. For L = 2 the stream is [{4}].

    # Raises
        PreconditionError: L < 2.

    """
    if L < 2:
        raise exceptions.PreconditionError('Period length must be at least 2, got %s' % L)
    if L == 2:
        return PeriodicStream([], [4])

    def digit(k):
        residue = k % L
        if residue in (0, 1):
            return 1
        if residue == L - 1:
            return 3
        return 4

    def periodic():
        return PeriodicStream([], [digit(k) for k in range(L)])

    return RuleStream('theorem8', L, digit, periodic=periodic)

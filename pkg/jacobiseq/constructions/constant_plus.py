# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from ..registry import construction
from .gaps import GapSequence, gap_stream
from .. import exceptions


# Module API

@construction('theorem3', theorem='3')
def construct(gaps=None, L=None):
    if gaps is None and L is None:
        raise exceptions.PreconditionError('Theorem 3 needs a gap sequence or a constant gap L')
    if gaps is None:
        gaps = GapSequence.constant(L)
    return theorem3_stream(gaps)


def theorem3_stream(gaps):
    """Stream whose Jacobi sequence is +1 everywhere

    a_0 = a_1 = 1, a_k = 2 for k = k_j - 1 and k = k_j + 1, a_k = 4
    otherwise. Then t_k = 3 mod 4 exactly at k = k_j - 1 and every
    symbol is +1. Different gap sequences give streams that are not
    congruent mod 4 but share the same Jacobi sequence.

    # Arguments
        gaps (GapSequence): the positions k_j.

    # Returns
        RuleStream

    """
    if not isinstance(gaps, GapSequence):
        raise exceptions.InvalidGapsError('Expected a gap sequence, got %r' % (gaps,))
    return gap_stream('theorem3', gaps, _digit)


# Internal

def _digit(k, gaps):
    if k < 0:
        raise exceptions.DomainError('Digit index must be non-negative, got %s' % k)
    if k < 2:
        return 1
    if (k + 1) in gaps or (k - 1) in gaps:
        return 2
    return 4

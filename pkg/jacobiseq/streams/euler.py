# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from ..registry import stream
from ..digits import RuleStream, PeriodicStream


# Module API

@stream('e')
def euler():
    """e = [2, {1, 2j, 1}], j = 1, 2, ...

    Its 4-representative is [2, {1,2,1,1,4,1}].

    """
    return RuleStream('e', None, _digit, periodic=_periodic)


# Internal

def _digit(k):
    if k == 0:
        return 2
    j, position = divmod(k - 1, 3)
    if position == 1:
        return 2 * (j + 1)
    return 1


def _periodic():
    return PeriodicStream([2], [1, 2, 1, 1, 4, 1])

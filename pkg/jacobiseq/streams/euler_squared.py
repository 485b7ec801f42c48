# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from six.moves import range
from ..registry import stream
from ..digits import RuleStream, PeriodicStream, digit_class


# Module API

@stream('e_squared')
def euler_squared():
    """e^2 = [7, {2+3(j-1), 1, 1, 3+3(j-1), 18+12(j-1)}], j = 1, 2, ...

    The block repeats mod 4 after four values of j, so the 4-representative
    has a pre-period of one digit and a period of twenty.

    """
    return RuleStream('e_squared', None, _digit, periodic=_periodic)


# Internal

def _digit(k):
    if k == 0:
        return 7
    j, position = divmod(k - 1, 5)
    return _BLOCK[position](j)


_BLOCK = [
    lambda j: 2 + 3 * j,
    lambda j: 1,
    lambda j: 1,
    lambda j: 3 + 3 * j,
    lambda j: 18 + 12 * j,
]


def _periodic():
    period = [digit_class(_digit(k)) for k in range(1, 21)]
    return PeriodicStream([digit_class(_digit(0))], period)

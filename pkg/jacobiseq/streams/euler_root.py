# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from ..registry import stream
from ..digits import RuleStream, PeriodicStream, digit_class


# Module API

@stream('e_inv_n', parameter={'name': 'n', 'minimum': 2})
def euler_root(n):
    """e^(1/n) = [{1, n(2j-1)-1, 1}], j = 1, 2, ..., for n >= 2."""

    def digit(k):
        j, position = divmod(k, 3)
        if position == 1:
            return n * (2 * j + 1) - 1
        return 1

    def periodic():
        # n(2j-1) - 1 alternates between n-1 and 3n-1 mod 4
        period = [1, n - 1, 1, 1, 3 * n - 1, 1]
        return PeriodicStream([], [digit_class(a) for a in period])

    return RuleStream('e_inv_n', n, digit, periodic=periodic)

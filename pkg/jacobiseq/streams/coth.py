# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from ..registry import stream
from ..digits import RuleStream, PeriodicStream, digit_class


# Module API

@stream('coth_family', parameter={'name': 'n', 'minimum': 1})
def coth_family(n):
    """[n, 3n, 5n, 7n, ...], the expansion of (e^(2/n)+1)/(e^(2/n)-1)

    The family is sometimes quoted under the name (e^(1/n)+1)/(e^(1/n)-1);
    the digits used here are a_j = (2j+1) n in either case.

    """

    def digit(k):
        return (2 * k + 1) * n

    def periodic():
        return PeriodicStream([], [digit_class(n), digit_class(3 * n)])

    return RuleStream('coth_family', n, digit, periodic=periodic)

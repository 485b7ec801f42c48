# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
from six.moves import range
from . import exceptions


# Module API

class DigitStream(object):
    """Indexed source of partial quotients a_k, k >= 0

    Streams are immutable and `digit(k)` is a pure function of `k`,
    so one stream can be shared between workers.

    """
    kind = None
    name = 'stream'

    def digit(self, k):
        raise NotImplementedError()

    def digits(self, n, start=0):
        return [self.digit(k) for k in range(start, start + n)]

    def periodic_form(self):
        """Eventually periodic stream congruent to this one mod 4

        # Raises
            UnsupportedStreamError: the stream has no known periodic form.

        """
        raise exceptions.UnsupportedStreamError(stream=self.name)

    def __iter__(self):
        k = 0
        while True:
            yield self.digit(k)
            k += 1

    def __repr__(self):
        return '<%s %s>' % (type(self).__name__, self.name)


class FiniteStream(DigitStream):
    """Explicit finite list of digits."""
    kind = 'explicit-finite'

    def __init__(self, digits):
        self.__digits = tuple(validate_digits(digits))
        self.name = format_digits(self.__digits)

    def __len__(self):
        return len(self.__digits)

    def digit(self, k):
        if k < 0 or k >= len(self.__digits):
            raise exceptions.StreamExhaustedError(length=len(self.__digits), index=k)
        return self.__digits[k]


class PeriodicStream(DigitStream):
    """Eventually periodic digits [pre, {period}]."""
    kind = 'eventually-periodic'

    def __init__(self, pre, period):
        self.__pre = tuple(validate_digits(pre))
        self.__period = tuple(validate_digits(period, start=len(self.__pre)))
        if not self.__period:
            raise exceptions.PreconditionError('Period of an eventually periodic stream must be non-empty')
        self.name = format_periodic(self.__pre, self.__period)

    @property
    def pre(self):
        return self.__pre

    @property
    def period(self):
        return self.__period

    @property
    def pure(self):
        return not self.__pre

    def digit(self, k):
        if k < len(self.__pre):
            return self.__pre[k]
        return self.__period[(k - len(self.__pre)) % len(self.__period)]

    def periodic_form(self):
        return self

    def __eq__(self, other):
        if not isinstance(other, PeriodicStream):
            return NotImplemented
        return (self.pre, self.period) == (other.pre, other.period)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.pre, self.period))


class RuleStream(DigitStream):
    """Digits computed in closed form from the index

    # Arguments
        rule (str): rule name, e.g. `e` or `theorem3`.
        parameter (any): rule parameter (an integer or a gap sequence).
        func (callable): `func(k) -> a_k`.
        periodic (callable, optional):
            returns the eventually periodic stream congruent mod 4.

    """
    kind = 'rule-based'

    def __init__(self, rule, parameter, func, periodic=None):
        self.rule = rule
        self.parameter = parameter
        self.__func = func
        self.__periodic = periodic
        self.name = rule if parameter is None else '%s(%s)' % (rule, parameter)

    def digit(self, k):
        if k < 0:
            raise exceptions.DomainError('Digit index must be non-negative, got %s' % k)
        return self.__func(k)

    def periodic_form(self):
        if self.__periodic is None:
            return super(RuleStream, self).periodic_form()
        return self.__periodic()


def digit_class(a):
    """Representative of a mod 4 in {1, 2, 3, 4}."""
    return (a - 1) % 4 + 1


def validate_digit(a, index=None):
    if not isinstance(a, six.integer_types) or isinstance(a, bool) or a < 1:
        raise exceptions.InvalidDigitError(digit=a, index=index)
    return a


def validate_digits(digits, start=0):
    return [validate_digit(a, index) for index, a in enumerate(digits, start=start)]


def format_digits(digits):
    return ','.join(str(a) for a in digits)


def format_periodic(pre, period):
    """Format as `pre,{period}`, e.g. `2,{1,2,1,1,4,1}`."""
    parts = [str(a) for a in pre]
    parts.append('{%s}' % format_digits(period))
    return ','.join(parts)

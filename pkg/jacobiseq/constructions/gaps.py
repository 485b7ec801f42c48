# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
import bisect
from simpleeval import simple_eval, DEFAULT_FUNCTIONS
from six.moves import range
from ..digits import RuleStream, PeriodicStream
from .. import exceptions


# Module API

class GapSequence(object):
    """Increasing even positions k_1 < k_2 < ... used by the constructions

    Positions are produced lazily: k_{j+1} = k_j + gap(j). Gaps come from
    the `differences` list, whose last entry repeats, or from an arithmetic
    `rule` in `j`. With neither, the gap is k_1 itself.

    # Arguments
        first (int): k_1, even and at least 6.
        differences (List[int], optional): gap(1), gap(2), ...
        rule (str, optional): expression for gap(j), e.g. `6 + 2*j`.

    # Raises
        InvalidGapsError: a position is odd or a gap is below 6.

    """

    # Public

    def __init__(self, first, differences=None, rule=None):
        if differences and rule:
            raise exceptions.InvalidGapsError('Use either differences or a rule, not both')
        self.__differences = [_validate_gap(gap, j) for j, gap in enumerate(differences or [], start=1)]
        self.__rule = rule
        self.__positions = [_validate_first(first)]

    @classmethod
    def constant(cls, gap):
        """Positions gap, 2*gap, 3*gap, ..."""
        return cls(gap)

    @classmethod
    def growing(cls, start, delta):
        """k_1 = start, gap(j) = start + delta*j."""
        if delta < 0 or delta % 2:
            raise exceptions.InvalidGapsError('Gap increment must be even and non-negative, got %s' % delta)
        if delta == 0:
            return cls(start)
        return cls(start, rule='%s + %s*j' % (start, delta))

    @classmethod
    def from_text(cls, text):
        """Parse `6,6,6`, `start=6,delta=2` or `start=6,rule=6+2*j`

        A plain list gives k_1 followed by the gaps, the last gap repeating.
        A rule takes the rest of the text, commas included.

        """
        text = text.strip()
        if '=' not in text:
            values = [_parse_int(value) for value in text.split(',')]
            return cls(values[0], differences=values[1:])
        options = {}
        head, marker, rule = text.partition('rule=')
        if marker:
            options['rule'] = rule.strip()
        for item in head.split(','):
            if not item.strip():
                continue
            key, _, value = item.partition('=')
            options[key.strip()] = value.strip()
        if 'start' not in options:
            raise exceptions.InvalidGapsError('Gap sequence "%s" has no start' % text)
        start = _parse_int(options.pop('start'))
        if set(options) == {'delta'}:
            return cls.growing(start, _parse_int(options['delta']))
        if set(options) == {'rule'}:
            return cls(start, rule=options['rule'])
        raise exceptions.InvalidGapsError('Gap sequence "%s" is not understood' % text)

    @property
    def first(self):
        return self.__positions[0]

    @property
    def rule(self):
        return self.__rule

    @property
    def tail_gap(self):
        """Gap repeated forever, or None when a rule drives the gaps."""
        if self.__rule is not None:
            return None
        if self.__differences:
            return self.__differences[-1]
        return self.first

    @property
    def constant_gap(self):
        """L when the positions are L, 2L, 3L, ..., else None."""
        if self.tail_gap != self.first:
            return None
        if any(gap != self.first for gap in self.__differences):
            return None
        return self.first

    @property
    def settled(self):
        """Index j from which all gaps equal `tail_gap`."""
        return len(self.__differences) + 1

    def gap(self, j):
        if j < 1:
            raise exceptions.DomainError('Gap index starts at 1, got %s' % j)
        if self.__rule is not None:
            try:
                value = simple_eval(self.__rule, names={'j': j}, functions=_RULE_FUNCTIONS)
            except Exception as exception:
                message = 'Gap rule "%s" fails for j=%s: %s' % (self.__rule, j, exception)
                raise exceptions.InvalidGapsError(message)
            return _validate_gap(value, j)
        if j <= len(self.__differences):
            return self.__differences[j - 1]
        return self.tail_gap

    def position(self, j):
        """k_j for j >= 1."""
        if j < 1:
            raise exceptions.DomainError('Position index starts at 1, got %s' % j)
        while len(self.__positions) < j:
            count = len(self.__positions)
            self.__positions.append(self.__positions[-1] + self.gap(count))
        return self.__positions[j - 1]

    def positions(self, limit):
        """All k_j < limit."""
        self.__extend(limit)
        return self.__positions[:bisect.bisect_left(self.__positions, limit)]

    def __contains__(self, k):
        self.__extend(k + 1)
        index = bisect.bisect_left(self.__positions, k)
        return index < len(self.__positions) and self.__positions[index] == k

    def __str__(self):
        if self.__rule is not None:
            return 'start=%s,rule=%s' % (self.first, self.__rule)
        return ','.join(str(value) for value in [self.first] + self.__differences)

    # Internal

    def __extend(self, limit):
        while self.__positions[-1] < limit:
            self.position(len(self.__positions) + 1)


# Internal

_RULE_FUNCTIONS = dict(DEFAULT_FUNCTIONS, max=max, min=min, abs=abs)


def _parse_int(value):
    try:
        return int(value)
    except (TypeError, ValueError):
        raise exceptions.InvalidGapsError('Gap value "%s" is not an integer' % value)


def _validate_first(first):
    if not isinstance(first, six.integer_types) or first < 6 or first % 2:
        raise exceptions.InvalidGapsError('First position must be even and at least 6, got %s' % first)
    return first


def _validate_gap(gap, j):
    if isinstance(gap, float) and gap.is_integer():
        gap = int(gap)
    if not isinstance(gap, six.integer_types) or gap < 6 or gap % 2:
        message = 'Gap %s must be even and at least 6, got %s' % (j, gap)
        raise exceptions.InvalidGapsError(message)
    return gap


def gap_stream(rule, gaps, func):
    """Rule stream over `gaps` with digits `func(k, gaps)`

    With a constant tail gap L the digits repeat with period L from
    k_m - 1 on, k_m being the first position after which all gaps are L.

    """

    def digit(k):
        return func(k, gaps)

    def periodic():
        if gaps.tail_gap is None:
            raise exceptions.UnsupportedStreamError(stream=stream.name)
        start = gaps.position(gaps.settled) - 1
        digits = [digit(k) for k in range(start + gaps.tail_gap)]
        return PeriodicStream(digits[:start], digits[start:])

    stream = RuleStream(rule, gaps, digit, periodic=periodic)
    return stream

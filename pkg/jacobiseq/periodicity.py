# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from six.moves import range
from .jacobi import jacobi_symbol, format_word, parse_word, PLUS
from .convergents import convergent_pair
from .digits import PeriodicStream, validate_digits, validate_digit
from . import exceptions
from . import config


# Module API

class PeriodDescriptor(object):
    """Pre-period and period of an eventually periodic symbol sequence

    # Arguments
        pre_period (List[JacobiValue]): symbols before the period, maybe empty.
        period (List[JacobiValue]): the repeating word, non-empty.
        minimal (bool): the period length is the least possible.
        certificate (Certificate, optional): certified even period.
        warnings (List[str], optional): notes gathered during detection.

    """

    # Public

    def __init__(self, pre_period, period, minimal=True, certificate=None, warnings=None):
        if not period:
            raise exceptions.PreconditionError('Period must be non-empty')
        self.__pre_period = list(pre_period)
        self.__period = list(period)
        self.__minimal = minimal
        self.certificate = certificate
        self.warnings = list(warnings or [])

    @property
    def pre_period(self):
        return list(self.__pre_period)

    @property
    def period(self):
        return list(self.__period)

    @property
    def length(self):
        return len(self.__period)

    @property
    def minimal(self):
        return self.__minimal

    @property
    def pure(self):
        return not self.__pre_period

    def symbol(self, k):
        offset = len(self.__pre_period)
        if k < offset:
            return self.__pre_period[k]
        return self.__period[(k - offset) % len(self.__period)]

    def symbols(self, n):
        return [self.symbol(k) for k in range(n)]

    def to_dict(self):
        return {
            'pre_period': format_word(self.__pre_period),
            'period': format_word(self.__period),
            'length': self.length,
            'pure': self.pure,
            'minimal': self.minimal,
            'certificate': self.certificate.to_dict() if self.certificate else None,
            'warnings': list(self.warnings),
        }


class Certificate(object):
    """Evidence for the certificate conditions of an even period L

    Truthy iff the convergent matrix is the identity mod 4 and
    J(t_{L-1}/s_{L-1}) = +1.

    """

    def __init__(self, L, matrix, jacobi_ts):
        self.L = L
        self.matrix = matrix
        self.jacobi_ts = jacobi_ts

    @property
    def matrix_mod4(self):
        return [[entry % 4 for entry in row] for row in self.matrix]

    @property
    def ok(self):
        return self.matrix_mod4 == [[1, 0], [0, 1]] and self.jacobi_ts is PLUS

    def __bool__(self):
        return self.ok

    __nonzero__ = __bool__

    def to_dict(self):
        return {
            'L': self.L,
            'ok': self.ok,
            'matrix': [list(row) for row in self.matrix],
            'matrix_mod4': self.matrix_mod4,
            'jacobi_ts': self.jacobi_ts.value,
        }


def minimal_period(word):
    """Least rotation p leaving the infinite repetition of `word` unchanged

    Uses the failure function: with b the longest proper border of the
    word, p = n - b when it divides n, and n otherwise.

    """
    word = list(word)
    if not word:
        raise exceptions.PreconditionError('Word must be non-empty')
    length = len(word)
    candidate = length - _failure(word)[length]
    if length % candidate == 0:
        return candidate
    return length


def is_period(word, p):
    """True iff word[i] == word[i + p] wherever both exist."""
    word = list(word)
    return all(word[i] == word[i + p] for i in range(len(word) - p))


def is_skew_symmetric(period):
    """True iff the second half is the first with +1 and -1 interchanged."""
    period = parse_word(period)
    if len(period) % 2:
        message = 'Skew-symmetry needs an even period length, got %s' % len(period)
        raise exceptions.PreconditionError(message)
    half = len(period) // 2
    return all(period[i + half] == -period[i] for i in range(half))


def verify_certificate(period_digits, L):
    """Check the sufficient condition for the even period L

    For the purely periodic [{period_digits}], the matrix
    ((s_{L-1}, s_{L-2}), (t_{L-1}, t_{L-2})) must be the identity mod 4 and
    J(t_{L-1}/s_{L-1}) must be +1. Then J(s_k/t_k) = J(s_{k+L}/t_{k+L}).

    # Raises
        PreconditionError: L is odd or not a multiple of the digit period.

    # Returns
        Certificate: truthy when both conditions hold.

    """
    period_digits = validate_digits(period_digits)
    if not period_digits:
        raise exceptions.PreconditionError('Period must be non-empty')
    if L < 2 or L % 2 or L % len(period_digits):
        message = 'L=%s must be even and a multiple of the period length %s'
        raise exceptions.PreconditionError(message % (L, len(period_digits)))
    digits = [period_digits[k % len(period_digits)] for k in range(L)]
    prev, last = convergent_pair(digits)
    matrix = [[last.s, prev.s], [last.t, prev.t]]
    return Certificate(L, matrix, jacobi_symbol(last.t, last.s))


def detect_period(stream, table):
    """Minimal period of the Jacobi sequence of an eventually periodic stream

    The transducer runs over the digits; states are compared at indices
    aligned to the digit period, where (state, position) is a deterministic
    system, so the first repeat closes a cycle. The cycle's symbol word is
    minimized and the period is then extended backwards over the
    pre-period, down to index 0.

    # Arguments
        stream (DigitStream): a stream with an eventually periodic form.
        table (TransducerTable): a closed transducer.

    # Raises
        UnsupportedStreamError: the stream has no eventually periodic form.

    # Returns
        PeriodDescriptor

    """
    form = stream.periodic_form()
    pre, digits = list(form.pre), list(form.period)
    warnings = []

    # Cycle
    symbols, start, cycle = _run_cycle(pre, digits, table)
    word = symbols[start:start + cycle]
    p = minimal_period(word)
    for divisor in _divisors(cycle):
        if divisor < p and is_period(word + word, divisor):
            message = 'Cycle of length %s has the shorter period %s' % (cycle, divisor)
            raise exceptions.TheoremFalsifiedError(message=message)

    # Backward extension
    first = start
    while first > 0 and symbols[first - 1] == symbols[first - 1 + p]:
        first -= 1
    descriptor = PeriodDescriptor(symbols[:first], symbols[first:first + p])

    # Period bound for purely periodic digit streams
    if not pre and not _within_bound(p, len(digits)):
        message = 'Period %s of %s does not divide %s'
        bounds = ' or '.join(str(factor * len(digits)) for factor in config.PERIOD_BOUND_FACTORS)
        warnings.append(message % (p, form.name, bounds))

    # Certificate of the purely periodic part
    if pre:
        pure_descriptor = detect_period(PeriodicStream([], digits), table)
    else:
        pure_descriptor = descriptor
    certificate, candidates = _search_certificate(digits, pure_descriptor)
    for L in candidates:
        message = 'L=%s is a period of {%s} but fails the certificate conditions'
        warnings.append(message % (L, ','.join(str(a) for a in digits)))

    descriptor.certificate = certificate
    descriptor.warnings = warnings
    return descriptor


# Internal

def _failure(word):
    failure = [-1] + [0] * len(word)
    for index in range(1, len(word) + 1):
        border = failure[index - 1]
        while border != -1 and word[border] != word[index - 1]:
            border = failure[border]
        failure[index] = border + 1
    return failure


def _run_cycle(pre, digits, table):
    pre = validate_digits(pre)
    offset, length = len(pre), len(digits)

    def digit(k):
        if k < offset:
            return pre[k]
        return validate_digit(digits[(k - offset) % length], k)

    seen = {}
    k = 0
    state = table.start(digit(0))
    symbols = [state.j_st]
    while True:
        if k >= offset and (k - offset) % length == 0:
            if state in seen:
                return symbols, seen[state], k - seen[state]
            seen[state] = k
        k += 1
        state = table.step(state, digit(k))
        symbols.append(state.j_st)


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _within_bound(p, length):
    return any((factor * length) % p == 0 for factor in config.PERIOD_BOUND_FACTORS)


def _search_certificate(digits, pure_descriptor):
    candidates = []
    for factor in config.CERTIFICATE_MULTIPLIERS:
        L = factor * len(digits)
        if L % 2:
            continue
        certificate = verify_certificate(digits, L)
        if certificate:
            return certificate, candidates
        if pure_descriptor.pure and L % pure_descriptor.length == 0:
            candidates.append(L)
    return None, candidates

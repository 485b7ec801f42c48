# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
import enum
import gmpy2
from . import exceptions


# Module API

class JacobiValue(enum.Enum):
    """Value of the extended Jacobi symbol: +1, -1 or `*`.

    `*` marks an even lower argument. It never takes part in products,
    so multiplying it with a sign raises instead of giving a wrong answer.
    Serialized as the single characters "+", "-" and "*".

    """
    PLUS = '+'
    MINUS = '-'
    STAR = '*'

    @classmethod
    def from_sign(cls, sign):
        if sign == 1:
            return cls.PLUS
        if sign == -1:
            return cls.MINUS
        raise exceptions.DomainError('Sign must be +1 or -1, got %r' % (sign,))

    @classmethod
    def from_symbol(cls, symbol):
        try:
            return cls(symbol)
        except ValueError:
            raise exceptions.DomainError('Unknown Jacobi symbol character %r' % (symbol,))

    @property
    def sign(self):
        if self is JacobiValue.STAR:
            raise exceptions.DomainError('The symbol * has no sign')
        return 1 if self is JacobiValue.PLUS else -1

    def __mul__(self, other):
        if not isinstance(other, JacobiValue):
            return NotImplemented
        return JacobiValue.from_sign(self.sign * other.sign)

    def __neg__(self):
        if self is JacobiValue.STAR:
            return self
        return JacobiValue.MINUS if self is JacobiValue.PLUS else JacobiValue.PLUS

    def __str__(self):
        return self.value


PLUS = JacobiValue.PLUS
MINUS = JacobiValue.MINUS
STAR = JacobiValue.STAR


def jacobi_symbol(m, n):
    """Extended Jacobi symbol (m/n)

    # Arguments
        m (int): upper argument, any sign.
        n (int): positive lower argument, coprime to `m`.

    # Raises
        DomainError: `n` is not positive.
        NotCoprimeError: gcd(m, n) != 1.

    # Returns
        JacobiValue: +1/-1 for odd `n`, `*` for even `n`.

    """
    if n <= 0:
        raise exceptions.DomainError('Lower argument must be positive, got %s' % n)
    if gmpy2.gcd(m, n) != 1:
        raise exceptions.NotCoprimeError(m=m, n=n)
    if n % 2 == 0:
        return STAR
    # (0/1) = 1 and (m/1) = 1
    if n == 1:
        return PLUS
    return JacobiValue.from_sign(int(gmpy2.jacobi(m % n, n)))


def epsilon2(m, n):
    """+1 iff m or n is 1 mod 4 (both odd positive)."""
    _ensure_odd(m, n)
    return 1 if (m % 4 == 1 or n % 4 == 1) else -1


def epsilon3(t, q, n):
    """+1 iff at least two of t, q, n are 1 mod 4 (all odd positive)."""
    _ensure_odd(t, q, n)
    ones = sum(1 for value in (t, q, n) if value % 4 == 1)
    return 1 if ones >= 2 else -1


def format_word(symbols):
    """Serialize a symbol word as a string over {+, -, *}."""
    if isinstance(symbols, six.string_types):
        return symbols
    return ''.join(symbol.value for symbol in symbols)


def parse_word(text):
    """Parse a string over {+, -, *} into a list of JacobiValue."""
    if not isinstance(text, six.string_types):
        return list(text)
    return [JacobiValue.from_symbol(char) for char in text]


# Internal

def _ensure_odd(*values):
    for value in values:
        if value <= 0 or value % 2 == 0:
            message = 'Argument %s must be an odd positive integer' % value
            raise exceptions.DomainError(message)

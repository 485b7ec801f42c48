# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import gmpy2
from six.moves import range
from . import exceptions
from .convergents import convergent_pair
from .digits import validate_digits


# Module API

class QuadraticSurd(object):
    """Quadratic irrational (P + sqrt(D)) / Q in canonical form

    Canonical means Q divides D - P^2 and gcd(P, Q, (D - P^2)/Q) = 1.
    The square-free part of D is not extracted. Q is positive unless the
    value lies below its conjugate.

    # Raises
        NotIrrationalError: D is a perfect square.

    """

    # Public

    def __init__(self, P, D, Q):
        if Q == 0:
            raise exceptions.DomainError('Surd denominator must be nonzero')
        if D <= 0 or gmpy2.is_square(D):
            raise exceptions.NotIrrationalError(discriminant=D)
        P, D, Q = int(P), int(D), int(Q)

        # Make Q divide D - P^2
        scale = abs(Q) // _gcd(Q, D - P * P)
        P, D, Q = P * scale, D * scale * scale, Q * scale

        # Remove common factors
        common = _gcd(_gcd(P, Q), (D - P * P) // Q)
        self.__P = P // common
        self.__D = D // (common * common)
        self.__Q = Q // common

    @classmethod
    def from_parts(cls, a, b, c, d):
        """Surd (a + b*sqrt(c)) / d with b != 0."""
        if b == 0:
            raise exceptions.DomainError('Surd needs a nonzero coefficient of the square root')
        if b < 0:
            a, b, d = -a, -b, -d
        return cls(a, b * b * c, d)

    @property
    def P(self):
        return self.__P

    @property
    def D(self):
        return self.__D

    @property
    def Q(self):
        return self.__Q

    def floor(self):
        root = int(gmpy2.isqrt(self.__D))
        if self.__Q > 0:
            return (self.__P + root) // self.__Q
        return (self.__P + root + 1) // self.__Q

    def expand(self, n):
        """First `n` partial quotients, by the integer-only P, Q recurrence."""
        digits = []
        P, D, Q = self.__P, self.__D, self.__Q
        root = int(gmpy2.isqrt(D))
        for _ in range(n):
            a = (P + root) // Q if Q > 0 else (P + root + 1) // Q
            digits.append(a)
            P = a * Q - P
            Q = (D - P * P) // Q
        return digits

    def to_dict(self):
        return {'P': self.__P, 'D': self.__D, 'Q': self.__Q}

    def __eq__(self, other):
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return (self.P, self.D, self.Q) == (other.P, other.D, other.Q)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.P, self.D, self.Q))

    def __str__(self):
        return '(%s+sqrt(%s))/%s' % (self.__P, self.__D, self.__Q)

    def __repr__(self):
        return 'QuadraticSurd(%s, %s, %s)' % (self.__P, self.__D, self.__Q)


def eval_eventually_periodic(pre, period):
    """Exact value of [pre, {period}]

    The purely periodic part y is the fixed point of the Moebius map of its
    period, y = (p y + p') / (q y + q'), and the pre-period is applied to y
    afterwards.

    # Arguments
        pre (List[int]): pre-period digits, possibly empty.
        period (List[int]): period digits, non-empty.

    # Raises
        PreconditionError: empty period.
        InvalidDigitError: a digit below 1.
        NotIrrationalError: the discriminant is a perfect square.

    # Returns
        QuadraticSurd

    """
    pre = validate_digits(pre)
    period = validate_digits(period, start=len(pre))
    if not period:
        raise exceptions.PreconditionError('Period must be non-empty')

    # Purely periodic part: q y^2 + (q' - p) y - p' = 0
    last2, last = convergent_pair(period)
    p, q, p1, q1 = last.s, last.t, last2.s, last2.t
    P = p - q1
    y = QuadraticSurd(P, P * P + 4 * q * p1, 2 * q)
    if not pre:
        return y

    # x = (A y + B) / (C y + E)
    last2, last = convergent_pair(pre)
    A, C, B, E = last.s, last.t, last2.s, last2.t
    alpha = A * y.P + B * y.Q
    beta = C * y.P + E * y.Q
    a = alpha * beta - A * C * y.D
    b = y.Q * (A * E - B * C)
    d = beta * beta - C * C * y.D
    return QuadraticSurd.from_parts(a, b, y.D, d)


# Internal

def _gcd(a, b):
    return int(gmpy2.gcd(a, b))

# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
from six.moves import range
from ..jacobi import JacobiValue, jacobi_symbol, epsilon2, MINUS
from ..convergents import SEEDS
from ..digits import validate_digit
from .gaps import GapSequence
from .. import exceptions


VARIANTS = {
    'thm3': 'theorem3',
    'thm7': 'theorem7',
    'thm8': 'theorem8',
}


# Module API

def lemma1_predict(t_k_mod4, t_k1_mod4, k_parity):
    """True iff J(s_k/t_k) and J(s_{k+1}/t_{k+1}) differ

    For odd t = t_k and n = t_{k+1} and d = (-1)^k, the determinant
    identity gives J(s_{k+1}/n) J(s_k/t) = J(d/n) J(-d/t) e2(t, n), which
    only depends on t, n mod 4 and the parity of k. The sign flips exactly
    for (1, 3, odd k) and (3, 1, even k).

    # Raises
        DomainError: a residue is not 1 or 3.

    """
    if t_k_mod4 not in (1, 3) or t_k1_mod4 not in (1, 3):
        message = 'Residues of odd denominators must be 1 or 3, got %s and %s'
        raise exceptions.DomainError(message % (t_k_mod4, t_k1_mod4))
    sign = 1 if k_parity % 2 == 0 else -1
    product = (
        jacobi_symbol(sign, t_k1_mod4) *
        jacobi_symbol(-sign, t_k_mod4) *
        JacobiValue.from_sign(epsilon2(t_k_mod4, t_k1_mod4)))
    return product is MINUS


def residue_pattern_check(stream, gaps, variant, n):
    """Check the denominator residues of a construction

    For `thm3` and `thm7`, `gaps` is a GapSequence and the check is
    t_k = 3 (mod 4) exactly at k = k_j - 1 (`thm3`) or k = k_j (`thm7`),
    t_k = 1 (mod 4) at every other k < n. For `thm8`, `gaps` is the
    period L and the check is t_k = 0 (mod 4) exactly at k = -1 (mod L),
    t_k = 1 (mod 4) elsewhere.

    # Raises
        PreconditionError: unknown variant, or a stream of another construction.
        InvalidGapsError: `gaps` does not fit the variant.

    """
    if variant not in VARIANTS:
        raise exceptions.PreconditionError('Unknown variant "%s", use thm3, thm7 or thm8' % variant)
    rule = getattr(stream, 'rule', None)
    if rule in VARIANTS.values() and rule != VARIANTS[variant]:
        message = 'Stream %s was built by %s, not %s' % (stream.name, rule, VARIANTS[variant])
        raise exceptions.PreconditionError(message)
    if n < 1:
        raise exceptions.PreconditionError('At least one term is required, got %s' % n)

    if variant == 'thm8':
        if not isinstance(gaps, six.integer_types) or isinstance(gaps, bool) or gaps < 2:
            raise exceptions.InvalidGapsError('Expected a period L >= 2, got %r' % (gaps,))

        def expected(k):
            return 0 if k % gaps == gaps - 1 else 1
    else:
        if not isinstance(gaps, GapSequence):
            raise exceptions.InvalidGapsError('Expected a gap sequence, got %r' % (gaps,))
        offset = -1 if variant == 'thm3' else 0
        marked = set(k + offset for k in gaps.positions(n + 1))

        def expected(k):
            return 3 if k in marked else 1

    previous, current = SEEDS[0].t, SEEDS[1].t
    for k in range(n):
        a = validate_digit(stream.digit(k), k)
        previous, current = current, (a * current + previous) % 4
        if current != expected(k):
            return False
    return True

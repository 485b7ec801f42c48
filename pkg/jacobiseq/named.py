# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
from .registry import registry
from . import exceptions


# Module API

def named_stream(name, n=None):
    """Digit stream of a named constant

    # Arguments
        name (str):
            `e`, `e_inv_n`, `e_squared` (alias `e2`) or `coth_family`
            (alias `coth`), or any stream registered with `@stream`.
        n (int, optional): the integer parameter of parameterized streams.

    # Raises
        UnknownStreamError: the name is not registered.
        DomainError: the parameter is missing or out of range.

    # Returns
        DigitStream

    """
    spec = registry.get_stream(name)
    parameter = spec['parameter']

    # Plain constant
    if parameter is None:
        if n is not None:
            message = 'Stream "%s" takes no parameter' % spec['name']
            raise exceptions.DomainError(message)
        return spec['func']()

    # Parameterized family
    if n is None:
        message = 'Stream "%s" requires the parameter %s' % (spec['name'], parameter['name'])
        raise exceptions.DomainError(message)
    if not isinstance(n, six.integer_types) or n < parameter['minimum']:
        message = 'Stream "%s" requires %s >= %s, got %s'
        message = message % (spec['name'], parameter['name'], parameter['minimum'], n)
        raise exceptions.DomainError(message)
    return spec['func'](n)

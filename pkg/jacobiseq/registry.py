# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import six
from copy import copy
from collections import OrderedDict
from . import exceptions
from . import config


# Module API

def stream(name, parameter=None):
    """Register a named digit stream (decorator)

    # Example

    ```python
    @stream('e')
    def euler():
        # ...
    ```

    # Arguments
        name (str): stream name
        parameter (dict, optional):
            `{'name': ..., 'minimum': ...}` when the factory takes an
            integer parameter

    """
    def decorator(func):
        registry.register_stream(func, name, parameter)
        return func
    return decorator


def construction(name, theorem=None):
    """Register a theorem construction (decorator)

    # Example

    ```python
    @construction('theorem8', theorem='8')
    def theorem8_stream(L):
        # ...
    ```

    # Arguments
        name (str): construction name
        theorem (str): theorem number the construction realizes

    """
    def decorator(func):
        registry.register_construction(func, name, theorem)
        return func
    return decorator


class Registry(object):

    # Public

    def __init__(self):
        self.__streams = OrderedDict()
        self.__constructions = OrderedDict()

    def register_stream(self, func, name, parameter=None):
        self.__streams[name] = {
            'func': func,
            'name': name,
            'parameter': parameter,
        }

    def register_construction(self, func, name, theorem=None):
        self.__constructions[name] = {
            'func': func,
            'name': name,
            'theorem': theorem,
        }

    def compile_streams(self):
        return copy(self.__streams)

    def compile_constructions(self):
        return copy(self.__constructions)

    def get_stream(self, name):
        name = config.STREAM_ALIASES.get(name, name)
        try:
            return self.__streams[name]
        except KeyError:
            raise exceptions.UnknownStreamError(name=name)

    def get_construction(self, name):
        name = config.THEOREM_CONSTRUCTIONS.get(six.text_type(name), name)
        try:
            return self.__constructions[name]
        except KeyError:
            message = 'Construction "%s" is not registered' % name
            raise exceptions.PreconditionError(message)


registry = Registry()

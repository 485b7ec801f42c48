# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import functools
from .catalog import catalog


@functools.total_ordering
class Finding(object):
    """Describes an occurrence of a pattern in a symbol word

    # Arguments
        code (str): The finding code. Must be one in the catalog.
        position (int): Index of the first symbol of the occurrence.
        pattern (str): The pattern found, e.g. `-++-`.
        word (str, optional): The digit word the symbols belong to.
        message (str, optional):
            The message. Defaults to the message from the catalog.

    # Raises
        KeyError: Raised if the finding code isn't known.

    """

    def __init__(self, code, position, pattern, word=None, message=None):
        self._spec = catalog['findings'][code]
        self._code = code
        self._position = position
        self._pattern = pattern
        self._word = word
        self._message = message or self._spec['message']

    def __iter__(self):
        for key, value in self._to_dict().items():
            yield (key, value)

    @property
    def code(self):
        return self._code

    @property
    def position(self):
        return self._position

    @property
    def pattern(self):
        return self._pattern

    @property
    def word(self):
        return self._word

    @property
    def message(self):
        return self._message.format(position=self.position, pattern=self.pattern)

    @property
    def description(self):
        return self._spec['description']

    def __eq__(self, other):
        return (self.position, self.code) == (other.position, other.code)

    def __lt__(self, other):
        return (self.position, self.code) < (other.position, other.code)

    def _to_dict(self):
        result = {
            'code': self.code,
            'position': self.position,
            'pattern': self.pattern,
            'message': self.message,
        }
        if self.word is not None:
            result['word'] = self.word
        return result

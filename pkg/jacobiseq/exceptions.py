# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

from .catalog import catalog


# Base

class JacobiSeqException(Exception):
    """Base jacobiseq exception

    # Arguments
        message (str, optional):
            The error message. Defaults to the catalog message for `code`.
        substitutions (dict):
            Values substituted into the message template.

    """
    code = 'jacobiseq-error'

    def __init__(self, message=None, **substitutions):
        self._spec = catalog['errors'].get(self.code, {})
        self.substitutions = substitutions
        template = message or self._spec.get('message') or self.code
        if substitutions:
            template = template.format(**substitutions)
        super(JacobiSeqException, self).__init__(template)

    @property
    def message(self):
        return self.args[0]

    @property
    def exit_code(self):
        return self._spec.get('exit-code', 2)

    @property
    def description(self):
        return self._spec.get('description')


# Input

class InvalidDigitError(JacobiSeqException):
    code = 'invalid-digit'


class NotIrrationalError(JacobiSeqException):
    code = 'not-irrational'


class NotCoprimeError(JacobiSeqException):
    code = 'not-coprime'


class DomainError(JacobiSeqException):
    code = 'domain-error'

    def __init__(self, message):
        super(DomainError, self).__init__(message=message)


class PreconditionError(JacobiSeqException):
    code = 'precondition-error'

    def __init__(self, message):
        super(PreconditionError, self).__init__(message=message)


class UnknownStreamError(JacobiSeqException):
    code = 'unknown-stream'


class UnsupportedStreamError(JacobiSeqException):
    code = 'unsupported-stream'


class StreamExhaustedError(JacobiSeqException):
    code = 'stream-exhausted'


class InvalidGapsError(JacobiSeqException):
    code = 'invalid-gaps'

    def __init__(self, message):
        super(InvalidGapsError, self).__init__(message=message)


# Internal invariants

class TheoremFalsifiedError(JacobiSeqException):
    code = 'theorem-falsified'


class IncompleteTableError(JacobiSeqException):
    code = 'incomplete-table'


class EngineMismatchError(JacobiSeqException):
    code = 'engine-mismatch'

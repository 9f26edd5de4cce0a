# -*- coding: utf-8 -*-
#

import functools

try:
    from functools import lru_cache
except ImportError:
    from backports.functools_lru_cache import lru_cache


class DgtException(Exception):
    pass


class InputError(DgtException):
    """Bad input; the cli exits with status 2."""


class UnsupportedError(DgtException):
    """Input outside the computable constant fields; the cli exits with status 3."""


class DivisionByZero(InputError):
    pass


class NotIrreducible(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class SingularInput(InputError):
    pass


class NotInvertible(InputError):
    pass


class NotInGroup(InputError):
    pass


class CyclicVectorNotFound(DgtException):

    def __init__(self, attempts):
        self.attempts = attempts
        super(CyclicVectorNotFound, self).__init__(attempts)

    def __str__(self):
        return 'no cyclic vector found after %d attempts' % self.attempts


class TooLarge(DgtException):

    def __init__(self, size, limit, l=None):
        self.size = size
        self.limit = limit
        self.l = l
        super(TooLarge, self).__init__(size, limit, l)

    def __str__(self):
        where = '' if self.l is None else ' at l=%d' % self.l
        return 'size %d exceeds limit %d%s' % (self.size, self.limit, where)


class UnsupportedConstantField(UnsupportedError):
    pass


class NotWellDefined(InputError):

    def __init__(self, parameter, location):
        self.parameter = parameter
        self.location = location
        super(NotWellDefined, self).__init__(parameter, location)

    def __str__(self):
        return 'specialization of %s is not defined at %s' % (self.parameter, self.location)


class ParseError(InputError):

    def __init__(self, message, text='', offset=0):
        self.message = message
        self.text = text
        self.offset = offset
        before = text[:offset]
        self.line = before.count('\n') + 1
        self.column = offset - (before.rfind('\n') + 1) + 1
        super(ParseError, self).__init__(message, offset)

    def __str__(self):
        return '%s at offset %d (line %d, column %d)' % (self.message, self.offset, self.line, self.column)


class UnknownIdentifier(ParseError):
    pass


def wrap_dgt_exc(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ZeroDivisionError as e:
            raise DivisionByZero(e)

    return wrapper


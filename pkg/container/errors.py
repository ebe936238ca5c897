# -*- coding:utf-8 -*-


class LogVectorError(Exception):
    pass


class UnderflowError(LogVectorError, IndexError):
    '''Removing or reading from an empty container.'''


class OutOfRangeError(LogVectorError, IndexError):
    '''Index outside [0, size).'''


class CapacityError(LogVectorError, OverflowError):
    '''Growing past 2 ** max_chunks - 1 elements.'''


class InvalidIteratorError(LogVectorError, ValueError):
    '''Iterator moved out of [begin, end], dereferenced at end, or used
    after a structural mutation of its container.'''


class InstrumentationError(LogVectorError, RuntimeError):
    '''Allocation events that cannot come from a correct container.'''


class InvariantError(LogVectorError, AssertionError):
    pass

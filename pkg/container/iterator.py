# -*- coding:utf-8 -*-

import operator

from container.errors import InvalidIteratorError
from utils.math_utils import chunk_start, locate


class LogIterator(object):
    '''
    Cursor over a LogVector kept as (chunk, offset).

    The global index is 2 ** chunk - 1 + offset. The end position of a
    container of size n is locate(n), which may name the chunk after the
    last active one.

    Parameters
    ----------
    vector: LogVector

    chunk: int

    offset: int

    '''
    __slots__ = ('_vector', '_slots', '_version', 'chunk', 'offset')

    def __init__(self, vector, chunk, offset):
        self._vector = vector
        self._slots = vector.directory.slots
        self._version = vector.version
        self.chunk = chunk
        self.offset = offset

    def _check(self):
        if self._version != self._vector.version:
            raise InvalidIteratorError(
                'log_vector changed after the iterator was created')

    @property
    def global_index(self):
        return chunk_start(self.chunk) + self.offset

    @property
    def location(self):
        return self.chunk, self.offset

    def copy(self):
        it = LogIterator(self._vector, self.chunk, self.offset)
        it._version = self._version
        return it

    def advance(self):
        self._check()
        if self.global_index >= self._vector.size():
            raise InvalidIteratorError('advance past end')
        self.offset += 1
        if self.offset == 1 << self.chunk:
            self.chunk += 1
            self.offset = 0

    def retreat(self):
        self._check()
        if self.chunk == 0 and self.offset == 0:
            raise InvalidIteratorError('retreat before begin')
        if self.offset == 0:
            self.chunk -= 1
            self.offset = (1 << self.chunk) - 1
        else:
            self.offset -= 1

    def seek(self, shift):
        '''
        Move by shift positions (negative moves backwards); the target must
        lie in [0, size].
        '''
        self._check()
        target = self.global_index + operator.index(shift)
        if not 0 <= target <= self._vector.size():
            raise InvalidIteratorError('seek to {} outside [0, {}]'.format(
                target, self._vector.size()))
        self.chunk, self.offset = locate(target)

    def shifted(self, shift):
        it = self.copy()
        it.seek(shift)
        return it

    def read(self):
        self._check()
        if self.global_index >= self._vector.size():
            raise InvalidIteratorError('dereferencing end')
        return self._slots[self.chunk][self.offset]

    def write(self, value):
        self._check()
        if self.global_index >= self._vector.size():
            raise InvalidIteratorError('dereferencing end')
        self._slots[self.chunk][self.offset] = value

    def __eq__(self, other):
        if not isinstance(other, LogIterator):
            return NotImplemented
        return (self._vector is other._vector and
                self.chunk == other.chunk and self.offset == other.offset)

    __hash__ = None

    def __repr__(self):
        return 'LogIterator(chunk={}, offset={}, global_index={})'.format(
            self.chunk, self.offset, self.global_index)

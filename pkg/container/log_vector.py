# -*- coding:utf-8 -*-

import logging
import operator

import numpy as np

from container.errors import (CapacityError, InvariantError, OutOfRangeError,
                              UnderflowError)
from container.iterator import LogIterator
from utils.alloc_stats import NULL_OBSERVER
from utils.math_utils import WORD_BITS, chunks_for_size, locate

logger = logging.getLogger(__name__)

# capacity 2 ** MAX_CHUNKS - 1 must fit the index word
MAX_CHUNKS = WORD_BITS - 1


class ChunkDirectory(object):
    '''
    Fixed table of max_chunks slots; slot c holds None or an ndarray of
    exactly 2 ** c cells.

    Parameters
    ----------
    max_chunks: int, number of slots

    dtype: numpy dtype of the cells

    observer: object with on_alloc(c) / on_free(c)

    '''

    def __init__(self, max_chunks, dtype, observer):
        self.slots = [None] * max_chunks
        self.dtype = np.dtype(dtype)
        self.observer = observer

    def __len__(self):
        return len(self.slots)

    def __getitem__(self, c):
        return self.slots[c]

    def allocate(self, c):
        chunk = np.empty(1 << c, dtype=self.dtype)
        self.slots[c] = chunk
        self.observer.on_alloc(c)
        logger.debug('allocated chunk %d (%d cells)', c, 1 << c)
        return chunk

    def fill(self, c, value):
        chunk = self.slots[c]
        if self.dtype.hasobject:
            # ndarray.fill stores the object itself, even a sequence
            chunk.fill(value)
        else:
            chunk[...] = value

    def release(self, c):
        self.slots[c] = None
        self.observer.on_free(c)
        logger.debug('released chunk %d', c)


class LogVector(object):
    '''
    Resizable array stored in chunks of 1, 2, 4, 8, ... cells.

    Growing allocates one new chunk and never copies elements; shrinking keeps
    at most one emptied chunk besides chunk 0 so alternating push/pop at a
    chunk boundary does not thrash the allocator.

    Parameters
    ----------
    dtype: numpy dtype of the cells, default object

    max_chunks: int, directory length, capacity is 2 ** max_chunks - 1

    observer: chunk allocation observer, e.g. utils.alloc_stats.AllocStats

    '''

    def __init__(self, dtype=object, max_chunks=MAX_CHUNKS, observer=None):
        if not 1 <= max_chunks <= MAX_CHUNKS:
            raise ValueError('max_chunks must be in [1, {}], got {}'.format(
                MAX_CHUNKS, max_chunks))
        self._directory = ChunkDirectory(
            max_chunks, dtype,
            NULL_OBSERVER if observer is None else observer)
        self._slots = self._directory.slots
        self._clears_cells = self._directory.dtype.hasobject
        self._size = 0
        self._active_chunks = 0
        self._version = 0
        # chunk 0 is kept for the lifetime of the container
        self._directory.allocate(0)
        self._chunks = 1

    @classmethod
    def with_size(cls, n, default=None, dtype=object, max_chunks=MAX_CHUNKS,
                  observer=None):
        '''
        Build a container holding n copies of default, filling whole chunks
        at once.

        Parameters
        ----------
        n: int, element count

        default: value of every element

        Returns
        ----------
        LogVector

        '''
        if n < 0:
            raise ValueError('size must be non-negative, got {}'.format(n))
        if n > (1 << max_chunks) - 1:
            raise CapacityError('{} elements exceed capacity {}'.format(
                n, (1 << max_chunks) - 1))
        vec = cls(dtype=dtype, max_chunks=max_chunks, observer=observer)
        if n == 0:
            return vec
        directory = vec._directory
        directory.fill(0, default)
        vec._active_chunks = 1
        s = n - 1
        while s > 0:
            s -= 1 << vec._chunks
            directory.allocate(vec._chunks)
            directory.fill(vec._chunks, default)
            vec._chunks += 1
            vec._active_chunks += 1
        vec._size = n
        return vec

    @property
    def dtype(self):
        return self._directory.dtype

    @property
    def max_chunks(self):
        return len(self._directory)

    @property
    def chunks(self):
        return self._chunks

    @property
    def active_chunks(self):
        return self._active_chunks

    @property
    def directory(self):
        return self._directory

    @property
    def version(self):
        return self._version

    def size(self):
        return self._size

    def __len__(self):
        return self._size

    def allocated_cells(self):
        return (1 << self._chunks) - 1

    def capacity(self):
        return (1 << len(self._directory)) - 1

    def push_back(self, value):
        size = self._size
        active = self._active_chunks
        if size == (1 << active) - 1:
            if size == self.capacity():
                raise CapacityError('log_vector is full ({} elements)'.format(
                    size))
            fresh = self._chunks == active
            if fresh:
                self._directory.allocate(active)
            # counters move only once the value is stored
            try:
                self._slots[active][0] = value
            except Exception:
                if fresh:
                    self._directory.release(active)
                raise
            if fresh:
                self._chunks += 1
            self._active_chunks = active + 1
        else:
            self._slots[active - 1][size - (1 << (active - 1)) + 1] = value
        self._size = size + 1
        self._version += 1

    def extend(self, values):
        for value in values:
            self.push_back(value)

    def pop_back(self):
        size = self._size
        if size == 0:
            raise UnderflowError('pop from empty log_vector')
        active = self._active_chunks
        top = 1 << (active - 1)
        if self._clears_cells:
            self._slots[active - 1][size - top] = None
        if size == top:
            # at most one emptied chunk is kept; chunks - 1 >= 1 here
            if self._chunks == active + 1:
                self._directory.release(active)
                self._chunks = active
            self._active_chunks = active - 1
        self._size = size - 1
        self._version += 1

    def pop(self):
        if self._size == 0:
            raise UnderflowError('pop from empty log_vector')
        value = self.back()
        self.pop_back()
        return value

    def clear(self):
        while self._chunks > 1:
            self._chunks -= 1
            self._directory.release(self._chunks)
        if self._clears_cells:
            self._slots[0][0] = None
        self._active_chunks = 0
        self._size = 0
        self._version += 1

    def _index(self, i):
        i = operator.index(i)
        if i < 0:
            i += self._size
        if not 0 <= i < self._size:
            raise OutOfRangeError('index {} out of range for size {}'.format(
                i, self._size))
        return i

    def get(self, i):
        c, k = locate(self._index(i))
        return self._slots[c][k]

    def set(self, i, value):
        c, k = locate(self._index(i))
        self._slots[c][k] = value

    __getitem__ = get
    __setitem__ = set

    def front(self):
        if self._size == 0:
            raise UnderflowError('front of empty log_vector')
        return self._slots[0][0]

    def back(self):
        size = self._size
        if size == 0:
            raise UnderflowError('back of empty log_vector')
        active = self._active_chunks
        return self._slots[active - 1][size - (1 << (active - 1))]

    def begin(self):
        return LogIterator(self, 0, 0)

    def end(self):
        c, k = locate(self._size)
        return LogIterator(self, c, k)

    def __iter__(self):
        it, stop = self.begin(), self.end()
        while it != stop:
            yield it.read()
            it.advance()

    def __reversed__(self):
        it, stop = self.end(), self.begin()
        while it != stop:
            it.retreat()
            yield it.read()

    def to_array(self):
        '''
        Flat copy of the live elements.

        Returns
        ----------
        np.ndarray, shape is (size, )

        '''
        if self._size == 0:
            return np.empty(0, dtype=self.dtype)
        parts = self._slots[:self._active_chunks - 1]
        last = self._size - (1 << (self._active_chunks - 1)) + 1
        parts.append(self._slots[self._active_chunks - 1][:last])
        return np.concatenate(parts)

    def check_invariants(self):
        '''
        Raise InvariantError if the chunk bookkeeping is inconsistent.
        '''
        size, chunks, active = self._size, self._chunks, self._active_chunks
        if chunks not in (active, active + 1):
            raise InvariantError('chunks={} active_chunks={}'.format(
                chunks, active))
        if chunks < 1:
            raise InvariantError('chunk 0 released')
        if (size == 0) != (active == 0):
            raise InvariantError('size={} active_chunks={}'.format(
                size, active))
        if active and not (1 << (active - 1)) <= size <= (1 << active) - 1:
            raise InvariantError('size={} does not fit {} active chunks'
                                 .format(size, active))
        if active and chunks_for_size(size) != active:
            raise InvariantError('size={} needs {} chunks, {} active'.format(
                size, chunks_for_size(size), active))
        for c in range(chunks):
            chunk = self._slots[c]
            if chunk is None or len(chunk) != 1 << c:
                raise InvariantError('chunk {} missing or misshaped'.format(c))
        tail = self._slots[chunks:]
        if tail.count(None) != len(tail):
            raise InvariantError('chunk present beyond chunks={}'.format(
                chunks))

    def __repr__(self):
        return 'LogVector(size={}, chunks={}, active_chunks={})'.format(
            self._size, self._chunks, self._active_chunks)

# -*- coding:utf-8 -*-

import itertools
from collections import deque

import numpy as np

from container.errors import OutOfRangeError, UnderflowError
from container.log_vector import LogVector
from utils.alloc_stats import AllocStats

# 256-byte element: an int64 key followed by opaque padding
LARGE_DTYPE = np.dtype([('key', '<i8'), ('pad', 'V248')])
WORD_DTYPE = np.dtype(np.int64)

# collections.deque and the linked list walk to an index, random reads
# above this size are not benchmarked
DEQUE_INDEX_LIMIT = 10 ** 5


def payloads(n, element_bytes, seed):
    '''
    Seeded element values for a run.

    Parameters
    ----------
    n: int

    element_bytes: str, 'word' or 'large'

    seed: int

    Returns
    ----------
    values: sequence of n elements, Python ints or LARGE_DTYPE records

    key: callable, element -> int

    default: element used by construction

    '''
    keys = np.random.default_rng(seed).integers(0, 1 << 31, n,
                                                dtype=np.int64)
    if element_bytes == 'word':
        return keys.tolist(), int, 0
    records = np.zeros(n, dtype=LARGE_DTYPE)
    records['key'] = keys
    return list(records), large_key, np.zeros((), dtype=LARGE_DTYPE)[()]


def large_key(x):
    return int(x['key'])


class DynamicArray(object):
    '''
    Contiguous array that doubles its capacity and copies every element
    when it runs out of room; elements are stored inline.
    '''

    def __init__(self, dtype=WORD_DTYPE, capacity=1):
        self._cells = np.empty(max(capacity, 1), dtype=dtype)
        self._size = 0

    @classmethod
    def with_size(cls, n, default, dtype=WORD_DTYPE):
        arr = cls(dtype, n)
        if arr._cells.dtype.hasobject:
            arr._cells.fill(default)
        else:
            arr._cells[...] = default
        arr._size = n
        return arr

    def __len__(self):
        return self._size

    def capacity(self):
        return len(self._cells)

    def push_back(self, value):
        size = self._size
        if size == len(self._cells):
            grown = np.empty(2 * size, dtype=self._cells.dtype)
            grown[:size] = self._cells
            self._cells = grown
        self._cells[size] = value
        self._size = size + 1

    def pop_back(self):
        if self._size == 0:
            raise UnderflowError('pop from empty array')
        self._size -= 1

    def get(self, i):
        if not 0 <= i < self._size:
            raise OutOfRangeError('index {} out of range for size {}'.format(
                i, self._size))
        return self._cells[i]


class LinkedList(object):
    '''
    Singly linked stack; index 0 is the oldest element.
    '''
    __slots__ = ('_head', '_size')

    def __init__(self):
        self._head = None
        self._size = 0

    def __len__(self):
        return self._size

    def push_back(self, value):
        self._head = (value, self._head)
        self._size += 1

    def pop_back(self):
        if self._head is None:
            raise UnderflowError('pop from empty linked list')
        self._head = self._head[1]
        self._size -= 1

    def get(self, i):
        if not 0 <= i < self._size:
            raise OutOfRangeError('index {} out of range for size {}'.format(
                i, self._size))
        node = self._head
        for _ in range(self._size - 1 - i):
            node = node[1]
        return node[0]


class BenchContainer(object):
    '''
    Uniform handle the workloads drive; hands out bound methods so the timed
    loops pay one call per operation for every container.
    '''
    name = None
    index_limit = None

    def __init__(self, element_bytes):
        self.element_bytes = element_bytes
        self.dtype = WORD_DTYPE if element_bytes == 'word' else LARGE_DTYPE

    def make(self):
        raise NotImplementedError

    def construct(self, n, default):
        raise NotImplementedError

    def pusher(self, c):
        return c.push_back

    def popper(self, c):
        return c.pop_back

    def getter(self, c):
        return c.get

    def stats(self, c):
        return None


class LogVecContainer(BenchContainer):
    name = 'logvec'

    def make(self):
        return LogVector(dtype=self.dtype, observer=AllocStats())

    def construct(self, n, default):
        return LogVector.with_size(n, default, dtype=self.dtype,
                                   observer=AllocStats())

    def stats(self, c):
        return c.directory.observer


class VectorContainer(BenchContainer):
    name = 'vector'

    def make(self):
        return DynamicArray(self.dtype)

    def construct(self, n, default):
        return DynamicArray.with_size(n, default, self.dtype)


class ListContainer(BenchContainer):
    name = 'list'

    def make(self):
        return []

    def construct(self, n, default):
        return [default] * n

    def pusher(self, c):
        return c.append

    def popper(self, c):
        return c.pop

    def getter(self, c):
        return c.__getitem__


class DequeContainer(ListContainer):
    name = 'deque'
    index_limit = DEQUE_INDEX_LIMIT

    def make(self):
        return deque()

    def construct(self, n, default):
        return deque(itertools.repeat(default, n))


class LinkedContainer(BenchContainer):
    name = 'linked'
    index_limit = DEQUE_INDEX_LIMIT

    def make(self):
        return LinkedList()

    def construct(self, n, default):
        c = LinkedList()
        push = c.push_back
        for _ in range(n):
            push(default)
        return c


CONTAINERS = {cls.name: cls for cls in (LogVecContainer, VectorContainer,
                                        ListContainer, DequeContainer,
                                        LinkedContainer)}
DEFAULT_CONTAINERS = ('logvec', 'vector', 'deque')


def get_container(name, element_bytes):
    try:
        return CONTAINERS[name](element_bytes)
    except KeyError:
        raise ValueError('unknown container {!r}, choose from {}'.format(
            name, ', '.join(sorted(CONTAINERS))))

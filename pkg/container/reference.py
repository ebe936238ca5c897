# -*- coding:utf-8 -*-

import operator
from collections import namedtuple

import numpy as np

from container.errors import LogVectorError, OutOfRangeError, UnderflowError
from container.log_vector import LogVector
from utils.alloc_stats import AllocStats
from utils.math_utils import Location


class ReferenceVector(object):
    '''
    Flat list model with the LogVector API; its observable behaviour is the
    contract LogVector is tested against.
    '''

    def __init__(self):
        self.items = []

    @classmethod
    def with_size(cls, n, default=None):
        if n < 0:
            raise ValueError('size must be non-negative, got {}'.format(n))
        vec = cls()
        vec.items = [default] * n
        return vec

    def size(self):
        return len(self.items)

    def __len__(self):
        return len(self.items)

    def push_back(self, value):
        self.items.append(value)

    def extend(self, values):
        self.items.extend(values)

    def pop_back(self):
        if not self.items:
            raise UnderflowError('pop from empty reference vector')
        self.items.pop()

    def pop(self):
        if not self.items:
            raise UnderflowError('pop from empty reference vector')
        return self.items.pop()

    def clear(self):
        self.items = []

    def _index(self, i):
        i = operator.index(i)
        if i < 0:
            i += len(self.items)
        if not 0 <= i < len(self.items):
            raise OutOfRangeError('index {} out of range for size {}'.format(
                i, len(self.items)))
        return i

    def get(self, i):
        return self.items[self._index(i)]

    def set(self, i, value):
        self.items[self._index(i)] = value

    __getitem__ = get
    __setitem__ = set

    def front(self):
        if not self.items:
            raise UnderflowError('front of empty reference vector')
        return self.items[0]

    def back(self):
        if not self.items:
            raise UnderflowError('back of empty reference vector')
        return self.items[-1]

    def __iter__(self):
        return iter(self.items)

    def __reversed__(self):
        return reversed(self.items)


def brute_locate(i):
    '''
    Locate global index i by subtracting chunk capacities 1, 2, 4, ...
    until it fits.

    Returns
    ----------
    Location

    '''
    c = 0
    while i >= 1 << c:
        i -= 1 << c
        c += 1
    return Location(c, i)


Op = namedtuple('Op', ['kind', 'args'])

# (kind, share) of randomly drawn operations
OP_WEIGHTS = (
    ('push', 0.45),
    ('pop', 0.30),
    ('get', 0.15),
    ('set', 0.08),
    ('clear', 0.01),
    ('with_size', 0.01),
)

MAX_RESTART_SIZE = 130


def generate_ops(seed, count):
    '''
    Seeded random operation sequence, reproducible from (seed, count).

    Parameters
    ----------
    seed: int

    count: int, number of operations

    Returns
    ----------
    list[Op]

    '''
    rng = np.random.default_rng(seed)
    kinds = [kind for kind, _ in OP_WEIGHTS]
    draws = rng.choice(len(kinds), size=count,
                       p=[share for _, share in OP_WEIGHTS])
    ops = []
    size = 0
    for draw in draws:
        kind = kinds[draw]
        if kind == 'push':
            ops.append(Op(kind, (int(rng.integers(0, 1 << 31)), )))
            size += 1
        elif kind == 'pop':
            ops.append(Op(kind, ()))
            size = max(size - 1, 0)
        elif kind == 'get':
            ops.append(Op(kind, (int(rng.integers(0, size + 2)), )))
        elif kind == 'set':
            ops.append(Op(kind, (int(rng.integers(0, size + 2)),
                                 int(rng.integers(0, 1 << 31)))))
        elif kind == 'clear':
            ops.append(Op(kind, ()))
            size = 0
        else:
            n = int(rng.integers(0, MAX_RESTART_SIZE))
            ops.append(Op(kind, (n, int(rng.integers(0, 1 << 31)))))
            size = n
    return ops


def apply(container, op, factory):
    '''
    Run one operation and describe what could be observed.

    Parameters
    ----------
    container: LogVector or ReferenceVector

    op: Op

    factory: callable(n, default), builds the replacement container for
             with_size

    Returns
    ----------
    (container, observation), observation is
    (outcome, value, size, (front, back) or None); outcome is 'ok' or the
    error class name

    '''
    value = None
    try:
        if op.kind == 'push':
            container.push_back(op.args[0])
        elif op.kind == 'pop':
            value = container.pop()
        elif op.kind == 'get':
            value = container.get(op.args[0])
        elif op.kind == 'set':
            container.set(op.args[0], op.args[1])
        elif op.kind == 'clear':
            container.clear()
        elif op.kind == 'with_size':
            container = factory(*op.args)
        elif op.kind == 'front':
            value = container.front()
        elif op.kind == 'back':
            value = container.back()
        elif op.kind == 'iterate':
            value = tuple(container)
        elif op.kind == 'iterate_reverse':
            value = tuple(reversed(container))
        else:
            raise ValueError('unknown operation {!r}'.format(op.kind))
        outcome = 'ok'
    except LogVectorError as e:
        outcome = type(e).__name__
    size = container.size()
    peek = (container.front(), container.back()) if size else None
    return container, (outcome, value, size, peek)


def logvector_factory(instrumented=False, dtype=object):
    '''
    Factory of LogVectors; instrumented ones get their own AllocStats,
    reachable as vec.directory.observer.
    '''
    def factory(n, default=None):
        observer = AllocStats() if instrumented else None
        return LogVector.with_size(n, default, dtype=dtype, observer=observer)
    return factory


def reference_factory(n, default=None):
    return ReferenceVector.with_size(n, default)


def first_divergence(ops, subject_factory, oracle_factory, on_step=None):
    '''
    Replay ops on a fresh subject and oracle.

    Returns
    ----------
    int or None, index of the first operation whose observations differ

    '''
    subject = subject_factory(0, None)
    oracle = oracle_factory(0, None)
    for step, op in enumerate(ops):
        subject, seen = apply(subject, op, subject_factory)
        oracle, expected = apply(oracle, op, oracle_factory)
        if on_step is not None:
            on_step(subject)
        if seen != expected:
            return step
    return None


def shrink(ops, diverges):
    '''
    Drop chunks of operations, then single ones, while the sequence still
    diverges.
    '''
    ops = list(ops)
    width = max(len(ops) // 2, 1)
    while True:
        removed = False
        i = 0
        while i < len(ops):
            candidate = ops[:i] + ops[i + width:]
            if candidate and diverges(candidate):
                ops = candidate
                removed = True
            else:
                i += width
        if width > 1:
            width //= 2
        elif not removed:
            return ops


class Divergence(object):
    def __init__(self, seed, step, prefix):
        self.seed = seed
        self.step = step
        self.prefix = prefix

    def __str__(self):
        lines = ['seed={} diverged at step {}, minimized prefix ({} ops):'
                 .format(self.seed, self.step, len(self.prefix))]
        lines.extend('  {} {}'.format(op.kind, ' '.join(map(str, op.args)))
                     for op in self.prefix)
        return '\n'.join(lines)

    __repr__ = __str__


def run_differential(seed, count, subject_factory=None,
                     oracle_factory=reference_factory, on_step=None):
    '''
    Compare subject and oracle over a seeded random sequence that ends with
    a forward and a reverse traversal.

    Parameters
    ----------
    seed: int

    count: int, number of random operations

    subject_factory: callable(n, default), default builds plain LogVectors

    on_step: callable(subject), run after every operation, e.g. to check
             invariants

    Returns
    ----------
    Divergence or None

    '''
    if subject_factory is None:
        subject_factory = logvector_factory()
    ops = generate_ops(seed, count)
    ops += [Op('iterate', ()), Op('iterate_reverse', ())]
    step = first_divergence(ops, subject_factory, oracle_factory, on_step)
    if step is None:
        return None

    def diverges(candidate):
        return first_divergence(candidate, subject_factory,
                                oracle_factory) is not None

    return Divergence(seed, step, shrink(ops[:step + 1], diverges))

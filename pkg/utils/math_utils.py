# -*- coding:utf-8 -*-

import sys
from collections import namedtuple

# bits in the platform index word (Py_ssize_t)
WORD_BITS = sys.maxsize.bit_length() + 1


Location = namedtuple('Location', ['chunk', 'offset'])


def count_leading_zeros(x, bits=WORD_BITS):
    '''
    Number of leading zero bits of x inside a word of `bits` bits.

    Parameters
    ----------
    x: int, 1 <= x < 2 ** bits

    bits: int, word width

    Returns
    ----------
    int

    '''
    if x < 1 or x >= 1 << bits:
        raise ValueError('count_leading_zeros expects 1 <= x < 2**{}, '
                         'got {}'.format(bits, x))
    return bits - x.bit_length()


def msb(x):
    '''
    Position of the most significant set bit:
    2 ** msb(x) <= x < 2 ** (msb(x) + 1).

    Parameters
    ----------
    x: int, x >= 1

    Returns
    ----------
    int

    '''
    if x < 1:
        raise ValueError('msb is undefined for {}'.format(x))
    return x.bit_length() - 1


def locate(i):
    '''
    Map a global element index to the chunk holding it and the cell inside
    that chunk.

    Parameters
    ----------
    i: int, global index, i >= 0

    Returns
    ----------
    Location, (chunk, offset) with 0 <= offset < 2 ** chunk

    '''
    g = i + 1
    c = msb(g)
    return Location(c, g ^ (1 << c))


def chunks_for_size(n):
    '''
    ceil(log2(n + 1)): chunks needed to hold n elements.
    '''
    return n.bit_length()


def chunk_start(c):
    '''
    Global index of cell 0 of chunk c.
    '''
    return (1 << c) - 1

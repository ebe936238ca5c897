# -*- coding:utf-8 -*-

from collections import deque

from container.errors import InstrumentationError

ALLOC = 'alloc'
FREE = 'free'


class NullObserver(object):
    '''
    Default chunk observer, ignores every event.
    '''
    __slots__ = ()

    def on_alloc(self, c):
        pass

    def on_free(self, c):
        pass


NULL_OBSERVER = NullObserver()


class AllocStats(object):
    '''
    Counts chunk allocations and releases reported by a ChunkDirectory.

    Parameters
    ----------
    log_limit: int, number of most recent (kind, chunk) events kept in
               event_log; 0 disables the log

    '''

    def __init__(self, log_limit=0):
        self.allocations = 0
        self.deallocations = 0
        self.live_cells = 0
        self.peak_cells = 0
        self.event_log = deque(maxlen=log_limit) if log_limit > 0 else None
        self.__allocated = set()

    def on_alloc(self, c):
        if c in self.__allocated:
            raise InstrumentationError(
                'chunk {} allocated twice without release'.format(c))
        self.__allocated.add(c)
        self.allocations += 1
        self.live_cells += 1 << c
        if self.live_cells > self.peak_cells:
            self.peak_cells = self.live_cells
        if self.event_log is not None:
            self.event_log.append((ALLOC, c))

    def on_free(self, c):
        if c not in self.__allocated:
            raise InstrumentationError(
                'chunk {} released while not allocated'.format(c))
        self.__allocated.remove(c)
        self.deallocations += 1
        self.live_cells -= 1 << c
        if self.event_log is not None:
            self.event_log.append((FREE, c))

    @property
    def chunks(self):
        return self.allocations - self.deallocations

    def events(self):
        '''
        Total allocator traffic so far, allocations + deallocations.
        '''
        return self.allocations + self.deallocations

    def __repr__(self):
        return ('AllocStats(allocations={}, deallocations={}, live_cells={}, '
                'peak_cells={})'.format(self.allocations, self.deallocations,
                                        self.live_cells, self.peak_cells))


def waste_fraction(stats, size):
    '''
    Share of allocated cells not holding a live element.

    Parameters
    ----------
    stats: AllocStats

    size: int, live elements of the observed container

    Returns
    ----------
    float, (live_cells - size) / live_cells, in [0, 1)

    '''
    if stats.live_cells < 1:
        raise InstrumentationError('no cells allocated')
    if size > stats.live_cells:
        raise InstrumentationError(
            'size {} exceeds {} allocated cells'.format(size,
                                                        stats.live_cells))
    return (stats.live_cells - size) / stats.live_cells

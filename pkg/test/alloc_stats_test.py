# -*- coding: utf-8 -*-

import unittest

from container.errors import InstrumentationError
from container.log_vector import LogVector
from utils.alloc_stats import (ALLOC, FREE, NULL_OBSERVER, AllocStats,
                               waste_fraction)


class Test(unittest.TestCase):

    def test_on_alloc(self):
        stats = AllocStats()
        stats.on_alloc(0)
        self.assertEqual(stats.live_cells, 1)
        for c in (1, 2, 3):
            stats.on_alloc(c)
        self.assertEqual(stats.live_cells, 15)
        self.assertEqual(stats.peak_cells, 15)
        self.assertEqual(stats.allocations, 4)

    def test_on_free(self):
        stats = AllocStats()
        for c in range(4):
            stats.on_alloc(c)
        stats.on_free(3)
        self.assertEqual(stats.live_cells, 7)
        self.assertEqual(stats.deallocations, 1)
        self.assertEqual(stats.peak_cells, 15)
        self.assertEqual(stats.chunks, 3)

    def test_inconsistent_events(self):
        stats = AllocStats()
        with self.assertRaises(InstrumentationError):
            stats.on_free(2)
        stats.on_alloc(2)
        with self.assertRaises(InstrumentationError):
            stats.on_alloc(2)

    def test_waste_fraction(self):
        stats = AllocStats()
        for c in range(3):
            stats.on_alloc(c)
        self.assertEqual(waste_fraction(stats, 7), 0)
        self.assertAlmostEqual(waste_fraction(stats, 3), 4 / 7)
        stats.on_alloc(3)
        self.assertAlmostEqual(waste_fraction(stats, 4), 11 / 15)
        with self.assertRaises(InstrumentationError):
            waste_fraction(stats, 16)
        with self.assertRaises(InstrumentationError):
            waste_fraction(AllocStats(), 0)

    def test_event_log(self):
        self.assertIsNone(AllocStats().event_log)
        stats = AllocStats(log_limit=3)
        vec = LogVector(observer=stats)
        vec.extend(range(8))
        vec.clear()
        self.assertEqual(list(stats.event_log),
                         [(FREE, 3), (FREE, 2), (FREE, 1)])
        stats = AllocStats(log_limit=10)
        vec = LogVector(observer=stats)
        vec.extend(range(4))
        self.assertEqual(list(stats.event_log),
                         [(ALLOC, 0), (ALLOC, 1), (ALLOC, 2)])

    def test_tracks_container(self):
        stats = AllocStats()
        vec = LogVector(observer=stats)
        vec.extend(range(50))
        for _ in range(40):
            vec.pop_back()
        self.assertEqual(stats.live_cells, vec.allocated_cells())
        self.assertEqual(stats.chunks, vec.chunks)

    def test_pushes_free_nothing(self):
        stats = AllocStats()
        vec = LogVector(observer=stats)
        vec.extend(range(1000))
        self.assertEqual(stats.allocations, 10)
        self.assertEqual(stats.deallocations, 0)

    def test_null_observer(self):
        NULL_OBSERVER.on_alloc(5)
        NULL_OBSERVER.on_free(5)
        vec = LogVector()
        self.assertIs(vec.directory.observer, NULL_OBSERVER)


if __name__ == '__main__':
    unittest.main()

# -*- coding: utf-8 -*-

import unittest
from collections import Counter

from hypothesis import given, settings, strategies as st

from container.reference import (OP_WEIGHTS, Op, ReferenceVector, apply,
                                 brute_locate, first_divergence,
                                 generate_ops, logvector_factory,
                                 reference_factory, run_differential, shrink)
from utils.math_utils import Location, locate


class LossyVector(ReferenceVector):
    '''Drops the sixth push.'''

    def push_back(self, value):
        if len(self.items) == 5:
            return
        super(LossyVector, self).push_back(value)


def lossy_factory(n, default=None):
    return LossyVector.with_size(n, default)


ops_strategy = st.lists(st.one_of(
    st.builds(lambda v: Op('push', (v, )), st.integers()),
    st.just(Op('pop', ())),
    st.builds(lambda i: Op('get', (i, )), st.integers(-40, 40)),
    st.builds(lambda i, v: Op('set', (i, v)), st.integers(-40, 40),
              st.integers()),
    st.just(Op('clear', ())),
    st.just(Op('front', ())),
    st.just(Op('back', ())),
    st.just(Op('iterate', ())),
    st.just(Op('iterate_reverse', ())),
    st.builds(lambda n, d: Op('with_size', (n, d)), st.integers(0, 40),
              st.integers()),
), max_size=200)


class Test(unittest.TestCase):

    def test_reference_vector(self):
        ref = ReferenceVector()
        for op in (Op('push', (1, )), Op('push', (2, )), Op('pop', ())):
            ref, _ = apply(ref, op, reference_factory)
        _, seen = apply(ref, Op('back', ()), reference_factory)
        self.assertEqual(seen, ('ok', 1, 1, (1, 1)))

    def test_error_outcomes_match(self):
        for op in (Op('get', (0, )), Op('pop', ()), Op('back', ()),
                   Op('set', (3, 'x'))):
            _, seen = apply(logvector_factory()(0), op, logvector_factory())
            _, expected = apply(ReferenceVector(), op, reference_factory)
            self.assertEqual(seen, expected)
            self.assertNotEqual(seen[0], 'ok')

    def test_brute_locate(self):
        self.assertEqual(brute_locate(0), Location(0, 0))
        self.assertEqual(brute_locate(6), Location(2, 3))
        self.assertEqual(brute_locate(1 << 20), locate(1 << 20))

    def test_generate_ops_is_reproducible(self):
        self.assertEqual(generate_ops(11, 500), generate_ops(11, 500))
        self.assertNotEqual(generate_ops(11, 500), generate_ops(12, 500))

    def test_generate_ops_weights(self):
        counts = Counter(op.kind for op in generate_ops(3, 10 ** 5))
        for kind, share in OP_WEIGHTS:
            self.assertAlmostEqual(counts[kind] / 10 ** 5, share, delta=0.01)

    def test_differential_suite(self):
        def check(vec):
            vec.check_invariants()
            stats = vec.directory.observer
            self.assertEqual(stats.live_cells, vec.allocated_cells())
            self.assertEqual(stats.chunks, vec.chunks)
            if vec.size():
                self.assertLessEqual(stats.live_cells, 4 * vec.size() - 1)

        subject = logvector_factory(instrumented=True)
        for seed in range(100):
            divergence = run_differential(seed, 10 ** 4, subject,
                                          on_step=check)
            self.assertIsNone(divergence, msg=str(divergence))

    @settings(max_examples=300, deadline=None)
    @given(ops_strategy)
    def test_arbitrary_sequences(self, ops):
        self.assertIsNone(first_divergence(ops, logvector_factory(),
                                           reference_factory))

    def test_divergence_is_reported(self):
        divergence = run_differential(5, 300, lossy_factory)
        self.assertIsNotNone(divergence)
        self.assertEqual(divergence.seed, 5)
        self.assertLessEqual(len(divergence.prefix), divergence.step + 1)
        self.assertIsNotNone(first_divergence(divergence.prefix,
                                              lossy_factory,
                                              reference_factory))
        self.assertIn('seed=5', str(divergence))

    def test_shrink_to_minimal_prefix(self):
        ops = [Op('push', (v, )) for v in range(20)]

        def diverges(candidate):
            return first_divergence(candidate, lossy_factory,
                                    reference_factory) is not None

        self.assertTrue(diverges(ops))
        self.assertEqual(len(shrink(ops, diverges)), 6)


if __name__ == '__main__':
    unittest.main()

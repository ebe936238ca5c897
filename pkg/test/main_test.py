# -*- coding: utf-8 -*-

import contextlib
import io
import os
import shutil
import tempfile
import unittest

from bench.records import load


class Test(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        if os.path.exists(self.tmpdir):
            shutil.rmtree(self.tmpdir)

    def run_main(self, argv):
        from main import main
        err = io.StringIO()
        with contextlib.redirect_stderr(err):
            return main(argv)

    def test_usage_errors(self):
        for argv in (['--containers', 'logvec,rope'],
                     ['--workload', 'queue'],
                     ['--element-bytes', 'huge'],
                     ['--repeats', '0'],
                     ['--n', 'ten'],
                     ['--workload', 'stack', '--n', '0']):
            with self.assertRaises(SystemExit) as cm:
                self.run_main(argv)
            self.assertEqual(cm.exception.code, 2)

    def test_construct_run(self):
        out = os.path.join(self.tmpdir, 'bench.csv')
        code = self.run_main(['--workload', 'construct', '--n', '0,10',
                              '--containers', 'logvec,list',
                              '--repeats', '1', '--out', out])
        self.assertEqual(code, 0)
        records = load(out)
        self.assertEqual([(r.container, r.n) for r in records],
                         [('list', 0), ('list', 10),
                          ('logvec', 0), ('logvec', 10)])
        self.assertEqual([r.allocs for r in records], [None, None, 1, 4])

    def test_same_seed_same_counters(self):
        counters = []
        for name in ('a.csv', 'b.csv'):
            out = os.path.join(self.tmpdir, name)
            self.run_main(['--workload', 'all', '--n', '100,1000',
                           '--repeats', '1', '--seed', '42', '--out', out])
            counters.append([(r.container, r.workload, r.n, r.allocs,
                              r.frees) for r in load(out)])
        self.assertEqual(counters[0], counters[1])
        self.assertEqual(len(counters[0]), 18)

    def test_unwritable_out(self):
        out = os.path.join(self.tmpdir, 'missing', 'bench.csv')
        code = self.run_main(['--workload', 'construct', '--n', '10',
                              '--repeats', '1', '--out', out])
        self.assertEqual(code, 1)


if __name__ == '__main__':
    unittest.main()

# -*- coding:utf-8 -*-

import argparse
import logging
import sys

from bench import runner
from bench.containers import CONTAINERS, DEFAULT_CONTAINERS
from bench.records import ELEMENT_BYTES, WORKLOADS, emit

DEFAULT_SWEEP = (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)


def csv_list(cast):
    def parse(text):
        try:
            return [cast(item) for item in text.split(',') if item]
        except ValueError:
            raise argparse.ArgumentTypeError(
                'invalid list {!r}'.format(text))
    return parse


parser = argparse.ArgumentParser(
    description='Benchmark log_vector against conventional containers.')
parser.add_argument('--workload', type=str, default='all',
                    choices=WORKLOADS + ('all', ))
parser.add_argument('--containers', type=csv_list(str),
                    default=list(DEFAULT_CONTAINERS))
parser.add_argument('--n', type=csv_list(int), default=None)
parser.add_argument('--large-sweep', action='store_true',
                    help='append n=10**7 to the default sweep')
parser.add_argument('--element-bytes', type=str, default='word',
                    choices=ELEMENT_BYTES)
parser.add_argument('--repeats', type=int, default=5)
parser.add_argument('--seed', type=int, default=0)
parser.add_argument('--out', type=str, default='-',
                    help="CSV path, '-' for stdout")
parser.add_argument('--logdir', type=str, default=None,
                    help='write mxboard scalars here')
parser.add_argument('--latency', action='store_true',
                    help='report max / median single-push latency')
parser.add_argument('--verbose', action='store_true')


def main(argv=None):
    args = parser.parse_args(argv)

    unknown = [name for name in args.containers if name not in CONTAINERS]
    if unknown:
        parser.error('unknown container(s): {}; choose from {}'.format(
            ', '.join(unknown), ', '.join(sorted(CONTAINERS))))
    if args.repeats < 1:
        parser.error('--repeats must be >= 1')
    if args.seed < 0 or args.seed >= 1 << 64:
        parser.error('--seed must fit an unsigned 64-bit integer')

    ns = args.n
    if ns is None:
        ns = list(DEFAULT_SWEEP) + ([10 ** 7] if args.large_sweep else [])
    workloads = WORKLOADS if args.workload == 'all' else (args.workload, )
    if any(n < 1 for n in ns) and workloads != ('construct', ):
        parser.error('--n values must be >= 1 for stack and array workloads')
    if any(n < 0 for n in ns):
        parser.error('--n values must be >= 0')

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    print('Benchmark configs: {}'.format(args), file=sys.stderr)

    sw = runner.open_summary_writer(args.logdir) if args.logdir else None
    try:
        records = runner.run_all(workloads, ns, args.containers,
                                 element_bytes=args.element_bytes,
                                 repeats=args.repeats, seed=args.seed, sw=sw)
        if args.latency:
            for name in args.containers:
                for n in sorted(ns):
                    if n < 1:
                        continue
                    median, peak = runner.latency_profile(
                        name, n, args.element_bytes, args.repeats, args.seed)
                    print('{} push latency n={}: median {:.0f}ns, max {:.0f}ns'
                          ' ({:.1f}x)'.format(name, n, median, peak,
                                              peak / median),
                          file=sys.stderr)
    finally:
        if sw is not None:
            sw.close()

    try:
        emit(records, args.out)
    except OSError as e:
        print('cannot write {}: {}'.format(args.out, e), file=sys.stderr)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())

# -*- coding:utf-8 -*-

import gc
import logging
import sys
import time
from contextlib import contextmanager

import numpy as np

from bench.containers import DEFAULT_CONTAINERS, get_container, payloads
from bench.records import BenchRecord, WorkloadSpec

logger = logging.getLogger(__name__)

CHECKSUM_MASK = (1 << 64) - 1


@contextmanager
def gc_paused():
    enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if enabled:
            gc.enable()


def stack_pass(container, spec):
    '''
    N pushes followed by N pops on a fresh container.

    Returns
    ----------
    (seconds, AllocStats or None)

    '''
    values, _, _ = payloads(spec.n, spec.element_bytes, spec.seed)
    c = container.make()
    push, pop = container.pusher(c), container.popper(c)
    n = spec.n
    with gc_paused():
        start = time.perf_counter()
        for v in values:
            push(v)
        for _ in range(n):
            pop()
        seconds = time.perf_counter() - start
    return seconds, container.stats(c)


def array_pass(container, spec):
    '''
    Fill n elements, then time n sequential and n seeded random reads.

    Returns
    ----------
    (seconds, AllocStats or None, checksum)

    '''
    values, key, _ = payloads(spec.n, spec.element_bytes, spec.seed)
    indices = np.random.default_rng(spec.seed + 1).integers(
        0, spec.n, spec.n).tolist()
    c = container.make()
    push = container.pusher(c)
    for v in values:
        push(v)
    get = container.getter(c)
    checksum = 0
    with gc_paused():
        start = time.perf_counter()
        for i in range(spec.n):
            checksum += key(get(i))
        for i in indices:
            checksum += key(get(i))
        seconds = time.perf_counter() - start
    return seconds, container.stats(c), checksum & CHECKSUM_MASK


def construct_pass(container, spec):
    '''
    Build a container of n default elements.

    Returns
    ----------
    (seconds, AllocStats or None)

    '''
    _, _, default = payloads(0, spec.element_bytes, spec.seed)
    with gc_paused():
        start = time.perf_counter()
        c = container.construct(spec.n, default)
        seconds = time.perf_counter() - start
    return seconds, container.stats(c)


def _measure(container, spec, one_pass):
    # warm-up pass is discarded
    one_pass(container, spec)
    times = []
    stats = None
    for _ in range(spec.repeats):
        result = one_pass(container, spec)
        times.append(result[0])
        stats = result[1]
    return BenchRecord(
        container=container.name,
        workload=spec.kind,
        n=spec.n,
        element_bytes=spec.element_bytes,
        median_s=float(np.median(times)),
        min_s=float(np.min(times)),
        allocs=None if stats is None else stats.allocations,
        frees=None if stats is None else stats.deallocations)


def run_stack(spec, containers=DEFAULT_CONTAINERS):
    '''
    Use each container as a stack: N pushes, then N pops.

    Parameters
    ----------
    spec: WorkloadSpec, kind 'stack'

    containers: iterable of container names

    Returns
    ----------
    list[BenchRecord]

    '''
    return [_measure(get_container(name, spec.element_bytes), spec,
                     stack_pass)
            for name in containers]


def run_array(spec, containers=DEFAULT_CONTAINERS):
    '''
    Indexed reads, sequential then random; prints the checksum of each
    container so the reads cannot be skipped.

    Returns
    ----------
    list[BenchRecord]

    '''
    records = []
    for name in containers:
        container = get_container(name, spec.element_bytes)
        limit = container.index_limit
        if limit is not None and spec.n > limit:
            logger.warning('skipping array workload for %s at n=%d: indexing '
                           'is linear above n=%d', name, spec.n, limit)
            # kept as a row with empty timings so the grid stays whole
            records.append(BenchRecord(container=name, workload=spec.kind,
                                       n=spec.n,
                                       element_bytes=spec.element_bytes))
            continue
        _, _, checksum = array_pass(container, spec)
        print('{} array n={} checksum: {}'.format(name, spec.n, checksum),
              file=sys.stderr)
        records.append(_measure(container, spec, array_pass))
    return records


def run_construct(spec, containers=DEFAULT_CONTAINERS):
    '''
    Time building a container of n default elements.

    Returns
    ----------
    list[BenchRecord]

    '''
    return [_measure(get_container(name, spec.element_bytes), spec,
                     construct_pass)
            for name in containers]


RUNNERS = {
    'stack': run_stack,
    'array': run_array,
    'construct': run_construct,
}


def push_latencies(name, n, element_bytes='word', seed=0):
    '''
    Duration of every single push into a fresh container.

    Returns
    ----------
    np.ndarray, shape is (n, ), nanoseconds

    '''
    container = get_container(name, element_bytes)
    values, _, _ = payloads(n, element_bytes, seed)
    c = container.make()
    push = container.pusher(c)
    clock = time.perf_counter_ns
    latencies = np.empty(n, dtype=np.int64)
    with gc_paused():
        for j, v in enumerate(values):
            start = clock()
            push(v)
            latencies[j] = clock() - start
    return latencies


def push_seconds(name, n, element_bytes='word', seed=0):
    '''
    Total time of n pushes into a fresh container, one clock read on each
    side of the loop.
    '''
    container = get_container(name, element_bytes)
    values, _, _ = payloads(n, element_bytes, seed)
    c = container.make()
    push = container.pusher(c)
    with gc_paused():
        start = time.perf_counter()
        for v in values:
            push(v)
        return time.perf_counter() - start


def latency_profile(name, n, element_bytes='word', repeats=5, seed=0):
    '''
    (median, max) single-push latency in ns, from the repeat with the lowest
    max / median ratio.
    '''
    best = None
    for _ in range(repeats):
        latencies = push_latencies(name, n, element_bytes, seed)
        median = max(float(np.median(latencies)), 1.0)
        peak = float(np.max(latencies))
        if best is None or peak / median < best[1] / best[0]:
            best = (median, peak)
    return best


def open_summary_writer(logdir):
    from mxboard import SummaryWriter
    return SummaryWriter(logdir=logdir, flush_secs=5)


def run_all(workloads, ns, containers=DEFAULT_CONTAINERS,
            element_bytes='word', repeats=5, seed=0, sw=None):
    '''
    Run every workload over every n.

    Parameters
    ----------
    workloads: iterable of 'stack' | 'array' | 'construct'

    ns: iterable of int

    sw: mxboard.SummaryWriter or None, receives median seconds and allocator
        counters per container and workload with n as the step

    Returns
    ----------
    list[BenchRecord]

    '''
    records = []
    for kind in workloads:
        for n in sorted(ns):
            spec = WorkloadSpec(kind=kind, n=n, element_bytes=element_bytes,
                                repeats=repeats, seed=seed)
            for record in RUNNERS[kind](spec, containers):
                records.append(record)
                if not record.timed:
                    print('{} {} n={}: skipped'.format(
                        record.container, record.workload, record.n),
                        file=sys.stderr)
                    continue
                print('{} {} n={}: median {:.6f}s, min {:.6f}s'.format(
                    record.container, record.workload, record.n,
                    record.median_s, record.min_s), file=sys.stderr)
                if sw is not None:
                    tag = '{}/{}/{}'.format(record.container, kind,
                                            element_bytes)
                    sw.add_scalar(tag=tag + '/median_s',
                                  value=record.median_s, global_step=n)
                    if record.allocs is not None:
                        sw.add_scalar(tag=tag + '/allocs',
                                      value=record.allocs, global_step=n)
    return records

# -*- coding:utf-8 -*-

import csv
import sys
from dataclasses import dataclass
from typing import Optional

WORKLOADS = ('stack', 'array', 'construct')
ELEMENT_BYTES = ('word', 'large')

HEADER = ('container', 'workload', 'element_bytes', 'n',
          'median_s', 'min_s', 'allocs', 'frees')


@dataclass(frozen=True)
class WorkloadSpec:
    kind: str
    n: int
    element_bytes: str = 'word'
    repeats: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.kind not in WORKLOADS:
            raise ValueError('unknown workload {!r}'.format(self.kind))
        if self.element_bytes not in ELEMENT_BYTES:
            raise ValueError('element_bytes must be one of {}, got {!r}'
                             .format(ELEMENT_BYTES, self.element_bytes))
        if self.n < (0 if self.kind == 'construct' else 1):
            raise ValueError('n={} too small for {}'.format(self.n,
                                                             self.kind))
        if self.repeats < 1:
            raise ValueError('repeats must be >= 1')


@dataclass(frozen=True)
class BenchRecord:
    container: str
    workload: str
    n: int
    element_bytes: str
    median_s: Optional[float] = None
    min_s: Optional[float] = None
    allocs: Optional[int] = None
    frees: Optional[int] = None

    @property
    def timed(self):
        return self.median_s is not None

    def sort_key(self):
        return (self.container, self.workload, self.element_bytes, self.n)

    def row(self):
        return (self.container, self.workload, self.element_bytes, self.n,
                _seconds(self.median_s), _seconds(self.min_s),
                '' if self.allocs is None else self.allocs,
                '' if self.frees is None else self.frees)


def _seconds(value):
    return '' if value is None else '{:.9f}'.format(value)


def emit(records, path):
    '''
    Write records as CSV sorted by container, workload, element size and n.

    Parameters
    ----------
    records: iterable of BenchRecord

    path: str, output file, '-' for stdout

    '''
    rows = [r.row() for r in sorted(records, key=BenchRecord.sort_key)]
    if path == '-':
        _write(sys.stdout, rows)
        return
    with open(path, 'w', newline='') as f:
        _write(f, rows)


def _write(f, rows):
    writer = csv.writer(f, lineterminator='\n')
    writer.writerow(HEADER)
    writer.writerows(rows)


def load(path):
    '''
    Read a CSV written by emit.

    Returns
    ----------
    list[BenchRecord]

    '''
    with open(path, 'r', newline='') as f:
        reader = csv.DictReader(f)
        return [BenchRecord(container=row['container'],
                            workload=row['workload'],
                            n=int(row['n']),
                            element_bytes=row['element_bytes'],
                            median_s=_optional_float(row['median_s']),
                            min_s=_optional_float(row['min_s']),
                            allocs=_optional_int(row['allocs']),
                            frees=_optional_int(row['frees']))
                for row in reader]


def _optional_int(text):
    return int(text) if text else None


def _optional_float(text):
    return float(text) if text else None

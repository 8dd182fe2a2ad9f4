"""
Progress meters for sampled runs (axiom suites, global-dimension samples).
Copyright (c) 2026 The exactcat Authors. All Rights Reserved.
"""

import sys
import time
import datetime

from collections import defaultdict, deque
from typing import Iterable, Iterator, Optional, TextIO, TypeVar

import numpy as np


__all__ = ['SmoothedValue', 'MetricLogger']

T = TypeVar('T')


class SmoothedValue(object):
    """A counter with its latest value, a windowed mean and a running mean."""

    def __init__(self, window_size: int=20, fmt: str='{value}') -> None:
        self.window = deque(maxlen=window_size)
        self.total = 0.0
        self.count = 0
        self.fmt = fmt

    def update(self, value, n: int=1) -> None:
        self.window.append(value)
        self.count += n
        self.total += value * n

    @property
    def value(self):
        return self.window[-1] if self.window else 0

    @property
    def avg(self) -> float:
        return float(np.mean(self.window)) if self.window else 0.0

    @property
    def global_avg(self) -> float:
        return self.total / self.count if self.count else 0.0

    def __str__(self) -> str:
        return self.fmt.format(value=self.value, avg=self.avg, global_avg=self.global_avg)


class MetricLogger(object):
    """Counters such as `checked` or `failures`, printed every few items to stderr.

    Progress never goes to stdout, which carries command results only.
    """

    def __init__(self, delimiter: str='\t', stream: Optional[TextIO]=None) -> None:
        self.meters = defaultdict(SmoothedValue)
        self.delimiter = delimiter
        self.stream = sys.stderr if stream is None else stream

    def update(self, **kwargs) -> None:
        for k, v in kwargs.items():
            if isinstance(v, (bool, np.bool_)):
                v = int(v)
            assert isinstance(v, (float, int, np.integer)), f'meter {k} got {type(v).__name__}'
            self.meters[k].update(v)

    def __getattr__(self, attr):
        meters = self.__dict__.get('meters', {})
        if attr in meters:
            return meters[attr]
        raise AttributeError(f"'{type(self).__name__}' object has no attribute '{attr}'")

    def __str__(self) -> str:
        return self.delimiter.join(f'{name}: {meter}' for name, meter in self.meters.items())

    def log_every(self, iterable: Iterable[T], print_freq: int, header: str='') -> Iterator[T]:
        items = list(iterable)
        total = len(items)
        width = len(str(total))
        step = SmoothedValue(fmt='{avg:.4f}')

        start = end = time.time()
        for i, item in enumerate(items):
            yield item
            step.update(time.time() - end)
            if i % max(print_freq, 1) == 0 or i == total - 1:
                eta = datetime.timedelta(seconds=int(step.global_avg * (total - i - 1)))
                line = [header, f'[{i:{width}d}/{total}]', f'eta: {eta}', str(self), f'time: {step}']
                print(self.delimiter.join(line), file=self.stream)
            end = time.time()

        elapsed = time.time() - start
        print(f'{header} Total time: {datetime.timedelta(seconds=int(elapsed))} '
              f'({elapsed / max(total, 1):.4f} s / it)', file=self.stream)

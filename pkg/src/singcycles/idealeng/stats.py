"""Per-computation counters (Groebner pairs, genericity draws).

Counters live in a context variable so concurrent jobs never share them.
"""
from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar

_current: ContextVar = ContextVar("singcycles_stats", default=None)


@contextmanager
def collect_stats():
    counter = Counter()
    token = _current.set(counter)
    try:
        yield counter
    finally:
        _current.reset(token)


def record(name: str, n: int = 1) -> None:
    counter = _current.get()
    if counter is not None:
        counter[name] += n

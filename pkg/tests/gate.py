"""Collects one PASS/FAIL line per acceptance criterion."""

import time
from contextlib import contextmanager

RESULTS = []


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    detail = {}
    try:
        yield detail
    except BaseException as exc:
        RESULTS.append((number, "FAIL", title, f"{type(exc).__name__}: {exc}".splitlines()[0][:160]))
        raise
    took = time.perf_counter() - start
    note = detail.get("note", "")
    RESULTS.append((number, "PASS", title, f"{note} ({took:.1f}s)".strip()))

import re
import time
from contextlib import contextmanager

import pytest

from unitprim import kernels

_ACCEPTANCE: list[tuple[str, str, bool, str]] = []


@pytest.fixture(params=kernels.available_backends())
def each_backend(request):
    previous = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome; failures are re-raised."""

    @contextmanager
    def record(cid: str, title: str):
        start = time.perf_counter()
        notes: list[str] = []
        try:
            yield notes
        except BaseException as exc:
            _ACCEPTANCE.append((cid, title, False, f"{type(exc).__name__}: {exc}".splitlines()[0]))
            raise
        else:
            elapsed = time.perf_counter() - start
            _ACCEPTANCE.append((cid, title, True, "; ".join([*notes, f"{elapsed:.2f}s"])))

    return record


def _order(record):
    num, suffix = re.match(r"C(\d+)(\w*)", record[0]).groups()
    return int(num), suffix


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid, title, ok, detail in sorted(_ACCEPTANCE, key=_order):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {cid:<4} {title} [{detail}]")

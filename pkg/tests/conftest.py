import contextlib
import time

import pytest

_RESULTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Context manager that times a criterion body, enforces its time limit and
    records a pass/fail line for the end-of-session summary."""
    results = request.config.stash.setdefault(_RESULTS, [])

    @contextlib.contextmanager
    def run(number: int, title: str, limit: float):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            dt = time.perf_counter() - t0
            results.append((number, False, f"{title} ({dt:.2f}s): {type(exc).__name__}: {exc}"))
            line = f"FAIL criterion {number}: {title} ({dt:.2f}s)"
            print(line)
            raise
        dt = time.perf_counter() - t0
        ok = dt < limit
        note = f"{title} ({dt:.2f}s, limit {limit:g}s)"
        results.append((number, ok, note))
        print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {note}")
        assert ok, f"criterion {number} took {dt:.2f}s, limit {limit:g}s"

    return run


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, note in sorted(results):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {note}")

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "thorough",
    max_examples=1000,
    deadline=None,
    database=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("thorough")


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


SUITE_BUDGET_S = 60.0
_start = {}


def pytest_sessionstart(session):
    import time

    _start["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import time

    elapsed = time.perf_counter() - _start["t"]
    ran = terminalreporter.stats.get("passed", []) + terminalreporter.stats.get("failed", [])
    full = any("test_properties.py" in r.nodeid for r in ran) and any("test_acceptance.py" in r.nodeid for r in ran)
    if not full:
        return
    ok = elapsed < SUITE_BUDGET_S
    terminalreporter.write_line(
        f"[{'PASS' if ok else 'FAIL'}] full suite wall time: {elapsed:.1f} s (budget {SUITE_BUDGET_S:.0f} s)"
    )
    if not ok:
        terminalreporter._session.exitstatus = 1

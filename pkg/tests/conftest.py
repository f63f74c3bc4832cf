import functools

import pytest
from hypothesis import HealthCheck, settings

from ringlab.expr import build

settings.register_profile("ringlab", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ringlab")


@functools.lru_cache(maxsize=None)
def ring(expr):
    """Shared built ring; derived sets and profiles memoize on it."""
    return build(expr)


@pytest.fixture
def R():
    return ring


# criterion number -> (passed, message); filled by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, msg = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {msg}")

import os
import sys
import time

from hypothesis import settings

settings.register_profile("default", max_examples=40, derandomize=True, deadline=None)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


RUNTIME_BUDGET_S = 5.0


def pytest_sessionstart(session):
    session.config._started = time.perf_counter()


def pytest_terminal_summary(terminalreporter, config):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    write = terminalreporter.write_line
    terminalreporter.section("acceptance")
    for label, ok in module.RESULTS.items():
        write(f"{'PASS' if ok else 'FAIL'}  {label}")
    elapsed = time.perf_counter() - config._started
    ok = elapsed < RUNTIME_BUDGET_S
    write(f"{'PASS' if ok else 'FAIL'}  suite runtime < {RUNTIME_BUDGET_S:g} s (measured {elapsed:.1f} s)")

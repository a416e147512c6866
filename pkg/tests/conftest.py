from __future__ import annotations

import sys


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    outcomes = getattr(module, "OUTCOMES", [])
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for outcome in sorted(outcomes, key=lambda o: o.number):
        terminalreporter.write_line(outcome.line())

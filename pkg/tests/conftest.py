"""Shared test configuration: per-criterion summary lines.

After a run that included tests/test_acceptance.py, print one PASS/FAIL
line per acceptance criterion so the gate can be read at a glance.
"""

import re

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            m = _PATTERN.search(nodeid)
            if m:
                n = int(m.group(1))
                ok = status == "passed"
                results[n] = results.get(n, True) and ok
    if not results:
        return
    terminalreporter.write_sep("=", "acceptance summary")
    for n in sorted(results):
        verdict = "PASS" if results[n] else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {n}: {verdict}")

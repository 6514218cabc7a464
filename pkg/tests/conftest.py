import re


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, whatever the verbosity."""
    rows = []
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.getreports(status):
            match = re.search(r"test_acceptance\.py::test_(criterion_\d+)", report.nodeid)
            if match is None:
                continue
            if status != "error" and report.when != "call":
                continue
            rows.append((match.group(1), status.upper(), report.duration))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, duration in sorted(rows):
        terminalreporter.write_line(f"{name}: {status} ({duration:.2f}s)")

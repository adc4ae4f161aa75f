import re

ACCEPTANCE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: end-to-end acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = ACCEPTANCE.search(getattr(rep, "nodeid", ""))
            if not m or (status == "passed" and rep.when != "call"):
                continue
            n = int(m.group(1))
            if status == "passed" and n in rows:
                continue
            rows[n] = (m.group(2), "PASS" if status == "passed" else "FAIL", rep.duration)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(rows):
        name, verdict, secs = rows[n]
        terminalreporter.write_line(f"criterion {n} {name.replace('_', ' ')}: {verdict} ({secs:.2f}s)")

"""Run-summary reporting for the acceptance gate.

The gate records one line per criterion; printing them from a
terminal-summary hook keeps them visible in every run (pytest captures
test stdout, including the low-level file descriptors, while tests run).
"""

_gate_lines = []


def record_gate_line(line: str) -> None:
    _gate_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _gate_lines:
        terminalreporter.section("acceptance gate")
        for line in _gate_lines:
            terminalreporter.write_line(line)

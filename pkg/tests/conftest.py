ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    passed = sum(line.startswith("PASS") for line in ACCEPTANCE_LINES)
    terminalreporter.write_line(f"{passed}/{len(ACCEPTANCE_LINES)} criteria pass")

# criterion id -> (passed, title, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE, key=lambda c: int(c[1:])):
        ok, title, detail = ACCEPTANCE[cid]
        line = f"{'PASS' if ok else 'FAIL'} {cid} {title}"
        terminalreporter.write_line(line + (f": {detail}" if detail and not ok else ""))

ACCEPTANCE = {}


def record(num: int, name: str, passed: bool, detail: str = ""):
    ACCEPTANCE[num] = (name, passed, detail)
    print(f"criterion {num:2d} [{'PASS' if passed else 'FAIL'}] {name} {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, passed, detail = ACCEPTANCE[num]
        tr.write_line(f"criterion {num:2d} [{'PASS' if passed else 'FAIL'}] {name} {detail}".rstrip())

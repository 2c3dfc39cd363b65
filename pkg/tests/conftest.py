import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# acceptance lines, filled in by test_acceptance.py
ACCEPTANCE: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: [int(p) for p in k.split(".")]):
        terminalreporter.write_line(ACCEPTANCE[key])

import pytest

from cwcodes.core import Code, CodeParams

FANO_SUPPORTS = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6)]

# filled by tests/test_acceptance.py, printed after the run
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def fano_code() -> Code:
    words = []
    for S in FANO_SUPPORTS:
        x = [0] * 7
        for i in S:
            x[i - 1] = 1
        words.append(tuple(x))
    return Code(CodeParams(2, 7, 4, 3), tuple(words))


@pytest.fixture
def fano():
    return fano_code()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.lstrip("C"))):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {'PASS' if ok else 'FAIL'}  {detail}")

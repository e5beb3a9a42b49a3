import pytest

from cohomone import parse

S7 = "K-=C(i,1,1)*H; K+=C(j,1,3)*H; H=gen{(i,i),(j,-j)}"
P2 = "K-=C(i,1,1)*H; K+=C(j,3,5)*H; H=gen{(i,i),(j,-j)}"
B7 = "K-=C(i,3,1)*H; K+=C(j,1,3)*H; H=gen{(-i,i),(j,-j)}"
Q1 = "K-=C(i,1,1)*H; K+=C(j,1,2)*H; H=gen{(i,i),(-1,1)}"
R = "K-=C(i,3,1)*H; K+=C(j,1,2)*H; H=gen{(i,i),(-1,1)}"
E1 = "K-=DS3*H; K+=C(i,1,2); H=gen{(-1,1)}"
E2 = "K-=DS3*H; K+=C(i,2,3); H=gen{(1,-1)}"


@pytest.fixture
def s7():
    return parse(S7)


@pytest.fixture
def q1():
    return parse(Q1)


@pytest.fixture
def e1():
    return parse(E1)


# Acceptance results are collected here and echoed in the terminal summary,
# one line per criterion.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")

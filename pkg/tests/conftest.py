import random

import pytest

from plgroups import THOMPSON, GroupParams, thompson_ab, thompson_x0, thompson_x1
from plgroups.numeric import Q

ACCEPTANCE = {}


def record(criterion: str, ok: bool, detail: str = ""):
    ACCEPTANCE[criterion] = (ok, detail)
    print(f"ACCEPTANCE {'PASS' if ok else 'FAIL'} {criterion} {detail}".rstrip())
    assert ok, f"{criterion}: {detail}"


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def F():
    return THOMPSON


@pytest.fixture
def P32():
    return GroupParams(3, Q(2))


@pytest.fixture
def x0():
    return thompson_x0()


@pytest.fixture
def x1():
    return thompson_x1()


@pytest.fixture
def ab():
    return thompson_ab()


@pytest.fixture
def rng():
    return random.Random(20240611)


def grid(params, depth=6):
    step = params.r / params.n**depth
    return [step * k for k in range(params.n**depth)]

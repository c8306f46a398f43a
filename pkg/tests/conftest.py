import sys

import pytest

from vsp10.exactfield import prime_field
from vsp10.vsp import decompose, gamma_of_secant, k3_random, s_points, secant_line


@pytest.fixture(scope="session")
def F():
    return prime_field(10007)


@pytest.fixture(scope="session")
def inst1(F):
    return k3_random(1, F)


@pytest.fixture(scope="session")
def s_points1(inst1):
    pts, lengths = s_points(inst1, 4)
    return pts, lengths


@pytest.fixture(scope="session")
def gamma1(inst1, s_points1):
    pts, _ = s_points1
    return gamma_of_secant(inst1, secant_line(pts[0], pts[1]))


@pytest.fixture(scope="session")
def presentation1(inst1, gamma1):
    return decompose(inst1, gamma1)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)

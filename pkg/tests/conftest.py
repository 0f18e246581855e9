import random

import pytest

from elimdeg import BiPoly, PatternPoly

# The first worked example: (x^d) stands for a full polynomial of degree d.
EX1_F = PatternPoly.dense({4: 2, 3: 2, 2: 4, 1: 5, 0: 5})
EX1_THETA = PatternPoly.dense({5: 8, 4: 6, 3: 9, 2: 4, 1: 3, 0: 4})

# Second worked example; ``a`` is the x^0 term of the y^4 coefficient and
# ``l`` the x^3 y^0 term.
EX2_F_GENERIC = PatternPoly.from_sets({4: {0, 2}, 2: {0, 1}, 1: {3}, 0: {0, 2, 3}})
EX2_F_DEGENERATE = PatternPoly.from_sets({4: {2}, 2: {0, 1}, 1: {3}, 0: {0, 2}})
EX2_THETA = PatternPoly.from_sets({2: {5}, 1: {0, 2}, 0: {0, 4}})


def bipoly(terms, variables=("x", "y")):
    """``{(i, j): c}`` -> BiPoly."""
    return BiPoly(terms, variables)


@pytest.fixture
def ex1():
    return EX1_F, EX1_THETA


@pytest.fixture
def ex2_generic():
    return EX2_F_GENERIC, EX2_THETA


@pytest.fixture
def ex2_degenerate():
    return EX2_F_DEGENERATE, EX2_THETA


def random_pattern(rng: random.Random, max_y: int, max_x: int, density=0.5,
                   need_y=True) -> PatternPoly:
    """Random sparse pattern with positive degree in y."""
    while True:
        support = {(i, j) for j in range(max_y + 1) for i in range(max_x + 1)
                   if rng.random() < density}
        p = PatternPoly(frozenset(support))
        if p.support and (not need_y or p.degree_in("y") >= 1):
            return p


def random_pair(rng: random.Random, max_y=3, max_x=3, density=0.5):
    """Random (f, theta) with no forced common factor y or x."""
    while True:
        f = random_pattern(rng, max_y, max_x, density)
        theta = random_pattern(rng, max_y, max_x, density)
        if 0 in f.support_sets or 0 in theta.support_sets:
            return f, theta


# -- acceptance summary -------------------------------------------------------

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker and (report.when == "call" or report.outcome != "passed"):
        _acceptance[marker] = report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("acceptance")
    if m:
        outcome.get_result().acceptance = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_acceptance.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}")

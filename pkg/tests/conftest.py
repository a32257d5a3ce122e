import random

import pytest

from lacunary_pit.expression import Expression


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def zero_identity():
    # (1+X)^2 - 2(1+X) + 1 - X^2
    return Expression.build(1, 1, [(1, 0, 2), (-2, 0, 1), (1, 0, 0), (-1, 2, 0)])


@pytest.fixture
def constant_one():
    # (1+X) - X
    return Expression.build(1, 1, [(1, 0, 1), (-1, 1, 0)])


@pytest.fixture
def product_5_7_11():
    # (X^5-1)(X^7-1)(X^11-1) expanded into 8 monomials, b = 0
    return Expression.build(1, 0, [(1, 23, 0), (-1, 18, 0), (-1, 16, 0), (-1, 12, 0),
                                   (1, 11, 0), (1, 7, 0), (1, 5, 0), (-1, 0, 0)])


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.format_results():
        terminalreporter.write_line(line)

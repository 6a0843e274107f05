import random

import pytest

from uum import make_extension, new_context

ACCEPTANCE = {}


def record(number, passed, detail):
    ACCEPTANCE[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {detail}")


A, B, G, D = "α", "β", "γ", "δ"

TABLE1_CROSSES = [("A", A), ("A", B), ("B", G), ("C", B), ("C", G)]
TABLE2_CROSSES = TABLE1_CROSSES + [
    ("A", D),
    ("B", A),
    ("D", A),
    ("D", D),
    ("E", B),
    ("E", G),
]


@pytest.fixture
def table1():
    return new_context("ABC", [A, B, G], TABLE1_CROSSES)


@pytest.fixture
def table2():
    return new_context("ABCDE", [A, B, G, D], TABLE2_CROSSES)


@pytest.fixture
def table4():
    return new_context("ABC", [A, B, G], [("A", G), ("B", A), ("B", B), ("C", A)])


@pytest.fixture
def ext12(table1, table2):
    return make_extension(table1, table2)


def random_rows(rng, n_obj, n_attr, density):
    return [
        sum(1 << m for m in range(n_attr) if rng.random() < density)
        for _ in range(n_obj)
    ]


@pytest.fixture
def rng():
    return random.Random(20261016)

from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from lauprod import Algebra, Scalar, complex_field
from lauprod.corpus import catalog_algebra

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repo")

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
scalars = st.builds(Scalar, rationals, rationals)
nonzero_scalars = scalars.filter(bool)


def elements(A: Algebra):
    return st.lists(scalars, min_size=A.dim, max_size=A.dim).map(A.element)


@pytest.fixture
def C():
    return complex_field()


@pytest.fixture
def M2():
    return catalog_algebra("matrix:2")


@pytest.fixture
def zero1():
    return catalog_algebra("zero:1")


@pytest.fixture
def C2():
    return catalog_algebra("pointwise:2")


@pytest.fixture
def nonassoc():
    # e1 e1 = e2, e2 e1 = e1, all other products zero
    return Algebra.unchecked("nonassoc_2", ["e1", "e2"], [[[0, 1], [0, 0]], [[1, 0], [0, 0]]])


@pytest.fixture
def nil2():
    # e1 e1 = e2, all other products zero (associative, commutative, nilpotent)
    return Algebra("nil_2", ["e1", "e2"], [[[0, 1], [0, 0]], [[0, 0], [0, 0]]])


@pytest.fixture
def upper_triangular():
    # basis e11, e12, e22 of upper-triangular 2x2 matrices
    units = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return Algebra.from_products("ut_2", ["e11", "e12", "e22"], lambda i, j: units.get((i, j), {}))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import math

import pytest

import spreadmax as sm

# The three n=3 matrices with one off-pattern entry that the searches
# keep meeting: all-ones with a single diagonal zero maximizes the
# spread on S_3[0, 1]; the two-zero variants do not.
CORNER_ZERO = [[0, 1, 1], [1, 1, 1], [1, 1, 1]]
DIAG_TWO_ZEROS = [[0, 1, 1], [1, 0, 1], [1, 1, 1]]
OFFDIAG_ZEROS = [[1, 0, 1], [0, 1, 1], [1, 1, 1]]

TWO_SQRT_3 = 2.0 * math.sqrt(3.0)
SQRT_5 = math.sqrt(5.0)


@pytest.fixture
def corner_zero() -> sm.SymMatrix:
    return sm.make_matrix(CORNER_ZERO)


@pytest.fixture
def diag_two_zeros() -> sm.SymMatrix:
    return sm.make_matrix(DIAG_TWO_ZEROS)


@pytest.fixture
def offdiag_zeros() -> sm.SymMatrix:
    return sm.make_matrix(OFFDIAG_ZEROS)


@pytest.fixture
def all_ones_3() -> sm.SymMatrix:
    return sm.make_matrix([[1, 1, 1]] * 3)


@pytest.fixture
def unit_box() -> sm.Interval:
    return sm.Interval(0.0, 1.0)

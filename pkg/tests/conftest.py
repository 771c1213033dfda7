from fractions import Fraction

import pytest

from lgw.series import Series


def S(terms, order):
    """Series from {(a, b, p, q): coeff}; short alias used throughout the tests."""
    return Series({k: Fraction(v) for k, v in terms.items()}, order)


ONE = (0, 0, 0, 0)


@pytest.fixture
def seed():
    return 20231

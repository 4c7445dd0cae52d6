"""
Shared fixtures and reference values for the binrec test suite.

Reference sequences are vendored from the OEIS so the tests never need the
network:

- A000108 (Catalan), listed from C_1 = 1
- A002083 (Narayana-Zidek-Capell), listed from N_1 = 1
"""

from fractions import Fraction

import pytest

CATALAN = [
    1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900,
    2674440, 9694845, 35357670, 129644790, 477638700, 1767263190, 6564120420,
    24466267020, 91482563640, 343059613650, 1289904147324,
]

NZC = [
    1, 1, 1, 2, 3, 6, 11, 22, 42, 84, 165, 330, 654, 1308, 2605, 5210, 10398,
    20796, 41550, 83100,
]

# a_1..a_7 at x = 1
A_AT_ONE = [1, 1, 2, 7, 34, 214, 1652]

# x values used across the shape and spectral tests
SPECTRAL_XS = [Fraction(-1, 10), Fraction(-1, 2), Fraction(-9, 10)]


@pytest.fixture
def half() -> Fraction:
    """x = -1/2, where y = 1/2 and |x/y| = 1."""
    return Fraction(-1, 2)


@pytest.fixture(params=SPECTRAL_XS, ids=["-1/10", "-1/2", "-9/10"])
def spectral_x(request) -> Fraction:
    return request.param

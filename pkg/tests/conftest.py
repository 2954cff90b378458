import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringcodes import galois_ring, make_integer_residue_ring, make_quotient_extension


@pytest.fixture(scope="session")
def z4():
    return make_integer_residue_ring(4)


@pytest.fixture(scope="session")
def z5():
    return make_integer_residue_ring(5)


@pytest.fixture(scope="session")
def z6():
    return make_integer_residue_ring(6)


@pytest.fixture(scope="session")
def z8():
    return make_integer_residue_ring(8)


@pytest.fixture(scope="session")
def z9():
    return make_integer_residue_ring(9)


@pytest.fixture(scope="session")
def z12():
    return make_integer_residue_ring(12)


@pytest.fixture(scope="session")
def z13():
    return make_integer_residue_ring(13)


@pytest.fixture(scope="session")
def z20():
    return make_integer_residue_ring(20)


@pytest.fixture(scope="session")
def z25():
    return make_integer_residue_ring(25)


@pytest.fixture(scope="session")
def gr92():
    """GR(9,2) as Z/9[x]/(x^2+x+2)."""
    return galois_ring(3, 2, 2)


@pytest.fixture(scope="session")
def f9_tower():
    """Two-level tower Z/3[x]/(x^2+x+2)[y]/(y^2-3): a ramified quadratic
    extension of the 9-element field (y^2 = 0 since 3 = 0)."""
    f9 = make_quotient_extension(make_integer_residue_ring(3), (2, 1, 1))
    return make_quotient_extension(f9, (f9.from_int(-3), f9.zero, f9.one))

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cambrian import groups  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return groups.type_A(2)


@pytest.fixture(scope="session")
def A3():
    return groups.type_A(3)


@pytest.fixture(scope="session")
def A4():
    return groups.type_A(4)


@pytest.fixture(scope="session")
def B2():
    return groups.type_B(2)


@pytest.fixture(scope="session")
def B3():
    return groups.type_B(3)


@pytest.fixture(scope="session")
def affA2():
    return groups.affine_A2()


@pytest.fixture(scope="session")
def affG2():
    return groups.affine_G2()


@pytest.fixture(scope="session")
def hyp542():
    return groups.hyperbolic_542()


@pytest.fixture(scope="session")
def univ3():
    return groups.universal(3)

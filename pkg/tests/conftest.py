import pytest

from hopfcoh.models import kA_in_yd, s3_data, taft_pair
from hopfcoh.radford import self_coefficients
from hopfcoh.cohomology import build_setting


@pytest.fixture(scope="session")
def taft2():
    return taft_pair(2, 5)


@pytest.fixture(scope="session")
def taft3():
    return taft_pair(3, 7)


@pytest.fixture(scope="session")
def s3():
    return s3_data()


@pytest.fixture(scope="session")
def s3_pair(s3):
    G, A, act, _ = s3
    return kA_in_yd(G, A, act, 5)


@pytest.fixture(scope="session")
def taft2_setting(taft2):
    E = taft2.braided
    return build_setting(taft2.group_hopf, E, self_coefficients(E))

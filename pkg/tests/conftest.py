import pytest

from pretenders import build_cascade
from pretenders.census import CensusReport


@pytest.fixture(scope="session")
def cascade():
    return build_cascade()


@pytest.fixture(scope="session")
def census_report(cascade):
    # one full scan per session; everything downstream reuses it
    return CensusReport.build(cascade)

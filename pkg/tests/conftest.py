import pytest

from wfano.brute import FANO_BOX, fano_box_search
from wfano.search import run_structured_search


@pytest.fixture(scope="session")
def structured():
    """The full structured census (minutes; shared across the session)."""
    return run_structured_search()


@pytest.fixture(scope="session")
def brute_box():
    """The full five-weight box check (about a minute on a few cores)."""
    return fano_box_search(FANO_BOX)

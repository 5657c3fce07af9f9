import pytest

from mincut.network.model import Network
from mincut.network.parser import load_fixture


@pytest.fixture(scope="session")
def net7() -> Network:
    return load_fixture("net7")


@pytest.fixture(scope="session")
def bridge() -> Network:
    return load_fixture("bridge")


@pytest.fixture(scope="session")
def net7_shuffled() -> Network:
    return load_fixture("net7_shuffled")

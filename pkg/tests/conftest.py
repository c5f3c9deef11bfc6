import pytest

from starcut import StarGraph


def pytest_addoption(parser):
    parser.addoption(
        "--stretch-seconds",
        type=float,
        default=75.0,
        help="wall budget per mode for the large n=5, k=1 search in the "
        "acceptance suite (use 1800 for the full certification run)",
    )


@pytest.fixture(scope="session")
def s3():
    return StarGraph(3)


@pytest.fixture(scope="session")
def s4():
    return StarGraph(4)


@pytest.fixture(scope="session")
def s5():
    return StarGraph(5)


@pytest.fixture(scope="session")
def s6():
    return StarGraph(6)

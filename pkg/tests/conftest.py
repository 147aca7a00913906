import pytest

from sclab.figures import ends_with_b, ends_with_b_completed, ends_with_c, ends_with_c_completed


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def ends_b():
    return ends_with_b()


@pytest.fixture
def ends_c():
    return ends_with_c()


@pytest.fixture
def ends_b_full():
    return ends_with_b_completed()


@pytest.fixture
def ends_c_full():
    return ends_with_c_completed()

import pytest

from smallmatroids.enumerate import build_tables


def pytest_addoption(parser):
    parser.addoption(
        "--run-long", action="store_true", default=False,
        help="run the hours-scale n=8 table reproduction")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "longrun: hours-scale runs, skipped unless --run-long")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="needs --run-long")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def tables6():
    return build_tables(6)

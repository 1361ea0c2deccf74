import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False,
        help="run the opt-in exhaustive sweeps (full E6-E8 Jacobi)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="opt-in, run with --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

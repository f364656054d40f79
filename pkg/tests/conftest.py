import pytest

from notakto import InferenceConfig, Solver, infer_value_table


def pytest_addoption(parser):
    parser.addoption(
        "--depth4",
        action="store_true",
        default=False,
        help="also run the ~5e6-position depth-4 verification sweep",
    )


@pytest.fixture(scope="session")
def solver():
    return Solver()


@pytest.fixture(scope="session")
def table(solver):
    return infer_value_table(solver, InferenceConfig())

import pytest


@pytest.fixture(scope="session")
def algebra():
    from kronnil.shuffle import ShuffleAlgebra

    return ShuffleAlgebra()

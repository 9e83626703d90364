import pytest

from inklusiv import Engine, load_engine_data
from inklusiv.engine import default_data_dir


@pytest.fixture(scope="session")
def data():
    return load_engine_data()


@pytest.fixture(scope="session")
def morph(data):
    return data.morph


@pytest.fixture(scope="session")
def lexicon(data):
    return data.lexicon


@pytest.fixture()
def engine(data):
    # fresh cache per test
    return Engine(data)


@pytest.fixture(scope="session")
def benchmark_path():
    return default_data_dir() / "benchmark.json"


@pytest.fixture(scope="session")
def neutral_words_path():
    return default_data_dir() / "neutral_words.txt"

import pytest
from hypothesis import settings

from deltaring import harness

settings.register_profile("det", derandomize=True, max_examples=60)
settings.load_profile("det")


@pytest.fixture(scope="session")
def corpus():
    return harness.build_corpus()


@pytest.fixture(scope="session")
def corpus_rings(corpus):
    return {entry.spec_text: entry.ring for entry in corpus}


@pytest.fixture(scope="session")
def z2(corpus_rings):
    return corpus_rings["Z2"]


@pytest.fixture(scope="session")
def z4(corpus_rings):
    return corpus_rings["Z4"]


@pytest.fixture(scope="session")
def f4(corpus_rings):
    return corpus_rings["table:f4.json"]


@pytest.fixture(scope="session")
def t2z2(corpus_rings):
    return corpus_rings["T(2, Z2)"]


@pytest.fixture(scope="session")
def m2z2(corpus_rings):
    return corpus_rings["M(2, Z2)"]

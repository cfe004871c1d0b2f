import numpy as np
import pytest

from asym.corpus import GROUP_NAMES, corpus_group, corpus_rep


@pytest.fixture(scope="session")
def corpus():
    """Every corpus group with its faithful representation."""
    out = {}
    for name in GROUP_NAMES:
        group = corpus_group(name)
        out[name] = (group, corpus_rep(name, group))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(0)

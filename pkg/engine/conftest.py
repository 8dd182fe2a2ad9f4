"""
Shared fixtures: small models and seeded generators.
"""

import numpy as np
import pytest

from .models import LinRep, CyclicMod, SplitEx
from .misc import setup_print


@pytest.fixture(scope='session', autouse=True)
def forced_print():
    # commands print their results with print(..., force=True)
    setup_print(True, 'builtin')


@pytest.fixture
def rng():
    return np.random.default_rng(0)


@pytest.fixture
def linrep():
    return LinRep(p=2, n=3, max_dim=2)


@pytest.fixture
def linrep_a2():
    return LinRep(p=3, n=2, max_dim=3)


@pytest.fixture
def z4():
    return CyclicMod(p=2, k=2, max_summands=3)


@pytest.fixture
def z9():
    return CyclicMod(p=3, k=2, max_summands=3)


@pytest.fixture
def split_z4(z4):
    return SplitEx(inner=z4)


@pytest.fixture
def split_linrep(linrep):
    return SplitEx(inner=linrep)

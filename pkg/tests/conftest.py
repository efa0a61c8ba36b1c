import random

import pytest

from braidforge.braid import Braid
from braidforge.degeneration import build_tt, phi8
from braidforge.regeneration import regenerate


@pytest.fixture(scope="session")
def graph():
    return build_tt()


@pytest.fixture(scope="session")
def phi8_fz(graph):
    return phi8(graph)


@pytest.fixture(scope="session")
def regen_fz(graph):
    return regenerate(graph)


@pytest.fixture
def rng():
    return random.Random(20260824)


def random_braid(rng, n, length=6):
    return Braid(n, [rng.choice([1, -1]) * rng.randint(1, n - 1)
                     for _ in range(length)])

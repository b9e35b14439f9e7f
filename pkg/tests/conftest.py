import random

import pytest

from nonloose.farey import Slope


@pytest.fixture
def rng():
    return random.Random(0xFA12E)


def S(text: str) -> Slope:
    return Slope.parse(text)

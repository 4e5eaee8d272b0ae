import random
from pathlib import Path

import pytest

from semitoric.fan import Fan
from semitoric.randomgen import random_fan_2d

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def y1_fan():
    # P^1 x C: rays ±e1, e2; maximal cones {e1, e2}, {-e1, e2}
    return Fan(2, ((1, 0), (-1, 0), (0, 1)), ((0, 2), (1, 2)))


@pytest.fixture
def y2_fan():
    # C x P^1: rays ±e2, e1; maximal cones {e1, e2}, {e1, -e2}
    return Fan(2, ((0, 1), (0, -1), (1, 0)), ((2, 0), (2, 1)))


@pytest.fixture
def p2_fan():
    rays = ((1, 0), (0, 1), (-1, -1))
    return Fan(2, rays, ((0, 1), (1, 2), (0, 2)))


@pytest.fixture
def two_end_fan():
    return Fan(2, ((1, 0), (-1, 0)), ((0,), (1,)))


def zero_fan(n):
    return Fan(n, (), ())


@pytest.fixture
def rng():
    return random.Random(20261014)


def random_2d_fans(count, seed=0):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        fan = random_fan_2d(rng)
        if fan is not None:
            out.append(fan)
    return out

import random
from fractions import Fraction

import pytest

from oddbook import build_min_member, plan_layout, saturate
from oddbook.graph import Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def min_member_64():
    layout = plan_layout(64, 2, 2, Fraction(1, 2))
    return build_min_member(layout)


@pytest.fixture(scope="session")
def saturated_64(min_member_64):
    sat, added = saturate(min_member_64.graph, 2, 2)
    return sat, added


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)

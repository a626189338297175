import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.models import SpaceKind
from core.poset import build_poset, build_space, quadric
from core.shapes import from_partition, to_partition


def poset_of(kind: SpaceKind, *params: int):
    return build_poset(build_space(kind, *params))


def shape(poset, *parts: int):
    """Shape a partir de contagens por linha"""
    return from_partition(poset, list(parts))


def nonequivariant(expr):
    """{(partição, grau em q): inteiro} de uma expressão"""
    return {
        (tuple(to_partition(expr.poset, s)), d): c
        for (s, d), c in expr.nonequivariant().items()
    }


@pytest.fixture(scope="session")
def gr24():
    return poset_of(SpaceKind.GR, 2, 4)


@pytest.fixture(scope="session")
def gr36():
    return poset_of(SpaceKind.GR, 3, 6)


@pytest.fixture(scope="session")
def gr37():
    return poset_of(SpaceKind.GR, 3, 7)


@pytest.fixture(scope="session")
def lg3():
    return poset_of(SpaceKind.LG, 3)


@pytest.fixture(scope="session")
def lg4():
    return poset_of(SpaceKind.LG, 4)


@pytest.fixture(scope="session")
def og5():
    return poset_of(SpaceKind.OG, 5)


@pytest.fixture(scope="session")
def q7():
    return build_poset(quadric(7))


@pytest.fixture(scope="session")
def q8():
    return build_poset(quadric(8))


@pytest.fixture(scope="session")
def e6():
    return poset_of(SpaceKind.E6P6)


@pytest.fixture(scope="session")
def e7():
    return poset_of(SpaceKind.E7P7)


SMALL_SPACES = [
    (SpaceKind.GR, (2, 4)),
    (SpaceKind.GR, (2, 5)),
    (SpaceKind.GR, (3, 6)),
    (SpaceKind.LG, (3,)),
    (SpaceKind.LG, (4,)),
    (SpaceKind.OG, (5,)),
    (SpaceKind.QUAD_ODD, (7,)),
    (SpaceKind.QUAD_EVEN, (8,)),
    (SpaceKind.E6P6, ()),
]


@pytest.fixture(scope="session", params=SMALL_SPACES,
                ids=lambda p: f"{p[0].value}{p[1]}")
def small_poset(request):
    kind, params = request.param
    return poset_of(kind, *params)

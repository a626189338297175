import pytest

from core.curves import curve_nbhd, distance, distance_table, psi_shape
from core.errors import DomainError
from core.models import Shape, SpaceKind
from core.shapes import enumerate_shapes

from conftest import poset_of, shape


def test_psi_grassmannian(gr24, gr36):
    assert psi_shape(gr24, shape(gr24, 2, 1)) == Shape(0)
    assert psi_shape(gr24, shape(gr24, 2, 2)) == shape(gr24, 1)
    assert psi_shape(gr36, shape(gr36, 2, 2, 2)) == shape(gr36, 1, 1)
    assert psi_shape(gr36, shape(gr36, 3, 2, 2)) == shape(gr36, 1, 1)


def test_psi_lagrangian(lg4):
    assert psi_shape(lg4, shape(lg4, 3, 2)) == shape(lg4, 2)
    assert psi_shape(lg4, shape(lg4, 4, 2, 1)) == shape(lg4, 2, 1)
    assert psi_shape(lg4, shape(lg4, 3, 2, 1)) == shape(lg4, 2, 1)


def test_psi_kills_z1(small_poset):
    for s in enumerate_shapes(small_poset):
        if s.issubset(small_poset.z1):
            assert psi_shape(small_poset, s) == Shape(0)


def test_psi_is_monotone(small_poset):
    shapes = enumerate_shapes(small_poset)
    for u in shapes:
        for v in shapes:
            if u.issubset(v):
                assert psi_shape(small_poset, u).issubset(psi_shape(small_poset, v))


def test_curve_nbhd(gr36):
    full = gr36.full
    assert curve_nbhd(gr36, full, 0) == full
    assert curve_nbhd(gr36, full, 1) == shape(gr36, 2, 2)
    assert curve_nbhd(gr36, full, 2) == shape(gr36, 1)
    assert curve_nbhd(gr36, full, 10) == Shape(0)
    with pytest.raises(DomainError):
        curve_nbhd(gr36, full, -1)


def test_distance_examples(gr24):
    assert distance(gr24, shape(gr24, 1), Shape(0)) == 1
    assert distance(gr24, shape(gr24, 2, 1), Shape(0)) == 1
    assert distance(gr24, gr24.full, Shape(0)) == 2
    assert distance(gr24, shape(gr24, 2), shape(gr24, 1, 1)) == 1
    assert distance(gr24, Shape(0), gr24.full) == 0


@pytest.mark.parametrize("kind,params,diameter", [
    (SpaceKind.GR, (2, 4), 2),
    (SpaceKind.GR, (3, 6), 3),
    (SpaceKind.LG, (4,), 4),
    (SpaceKind.OG, (5,), 2),
    (SpaceKind.QUAD_ODD, (7,), 2),
    (SpaceKind.QUAD_EVEN, (8,), 2),
    (SpaceKind.E6P6, (), 2),
    (SpaceKind.E7P7, (), 3),
])
def test_largest_distance(kind, params, diameter):
    poset = poset_of(kind, *params)
    assert distance(poset, poset.full, Shape(0)) == diameter
    assert max(distance_table(poset).values()) == diameter


def test_distance_zero_iff_contained(small_poset):
    for (u, v), d in distance_table(small_poset).items():
        assert (d == 0) == u.issubset(v)

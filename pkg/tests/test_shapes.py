import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.errors import DomainError
from core.models import Shape, SkewKind, SpaceKind
from core.rootcore import length
from core.shapes import (
    add_box, addable_boxes, classify_skew, dual, enumerate_shapes, from_cells,
    from_partition, from_weyl, is_ideal, remove_box, removable_boxes, rook_strips,
    to_partition, to_weyl,
)

from conftest import poset_of, shape


@pytest.mark.parametrize("kind,params,count", [
    (SpaceKind.GR, (2, 4), 6),
    (SpaceKind.GR, (3, 6), 20),
    (SpaceKind.GR, (3, 7), 35),
    (SpaceKind.LG, (4,), 16),
    (SpaceKind.OG, (5,), 16),
    (SpaceKind.QUAD_ODD, (7,), 8),
    (SpaceKind.QUAD_EVEN, (8,), 10),
    (SpaceKind.E6P6, (), 27),
    (SpaceKind.E7P7, (), 56),
])
def test_shape_counts(kind, params, count):
    assert len(enumerate_shapes(poset_of(kind, *params))) == count


def test_shapes_sorted_by_length(small_poset):
    shapes = enumerate_shapes(small_poset)
    assert shapes[0] == Shape(0)
    assert shapes[-1] == small_poset.full
    assert [s.length for s in shapes] == sorted(s.length for s in shapes)


def test_even_quadric_has_both_middle_classes(q8):
    partitions = {tuple(to_partition(q8, s)) for s in enumerate_shapes(q8)}
    assert (4,) in partitions
    assert (3, 1) in partitions


def test_classify_skew_grassmannian(gr24):
    assert classify_skew(gr24, shape(gr24, 2, 1), shape(gr24, 1)).kind == SkewKind.ROOK_STRIP
    assert classify_skew(gr24, shape(gr24, 2), Shape(0)).kind == SkewKind.SKEW_SHAPE
    assert classify_skew(gr24, shape(gr24, 1), shape(gr24, 2)).kind == SkewKind.NOT_CONTAINED
    empty = classify_skew(gr24, shape(gr24, 1), shape(gr24, 1))
    assert empty.kind == SkewKind.EMPTY
    assert empty.is_rook_strip and empty.is_short


def test_classify_skew_lagrangian(lg3):
    strip = classify_skew(lg3, shape(lg3, 2), shape(lg3, 1))
    assert strip.kind == SkewKind.SHORT_ROOK_STRIP
    assert strip.size == 1
    assert classify_skew(lg3, shape(lg3, 3), shape(lg3, 1)).kind == SkewKind.SHORT_SKEW_SHAPE
    # a caixa diagonal (1,1) é longa
    assert classify_skew(lg3, shape(lg3, 2, 1), shape(lg3, 2)).kind == SkewKind.ROOK_STRIP


def test_rook_strips_over_empty(gr24):
    strips = list(rook_strips(gr24, Shape(0)))
    assert strips == [(Shape(0), 0), (shape(gr24, 1), 1)]


def test_rook_strips_short_only(lg3):
    mu = shape(lg3, 1)
    assert list(rook_strips(lg3, mu, short_only=True)) == [(mu, 0), (shape(lg3, 2), 1)]


def test_rook_strips_are_rook_strips(small_poset):
    for mu in enumerate_shapes(small_poset)[:12]:
        for nu, size in rook_strips(small_poset, mu):
            skew = classify_skew(small_poset, nu, mu)
            assert skew.is_rook_strip
            assert skew.size == size


def test_add_and_remove_box_errors(gr24):
    s = shape(gr24, 1)
    first = s.boxes()[0]
    with pytest.raises(DomainError):
        add_box(gr24, s, first)
    corner = gr24.box_at((1, 1))
    with pytest.raises(DomainError):
        add_box(gr24, s, corner)
    with pytest.raises(DomainError):
        remove_box(gr24, s, corner)
    with pytest.raises(DomainError):
        remove_box(gr24, shape(gr24, 2), first)


@pytest.mark.parametrize("parts", [[3], [1, 2], [-1]])
def test_from_partition_rejects(gr24, parts):
    with pytest.raises(DomainError):
        from_partition(gr24, parts)


def test_from_cells(gr24):
    assert from_cells(gr24, [(0, 0), (0, 1)]) == shape(gr24, 2)
    with pytest.raises(DomainError):
        from_cells(gr24, [(0, 1)])
    with pytest.raises(DomainError):
        from_cells(gr24, [(2, 0)])


def test_partition_round_trip(small_poset):
    for s in enumerate_shapes(small_poset):
        assert from_partition(small_poset, to_partition(small_poset, s)) == s


def test_weyl_correspondence(small_poset):
    rs = small_poset.root_system
    for s in enumerate_shapes(small_poset):
        w = to_weyl(small_poset, s)
        assert length(rs, w) == s.length
        assert from_weyl(small_poset, w) == s


def test_from_weyl_rejects_non_minimal(gr24):
    rs = gr24.root_system
    # s_1 não é representante minimal quando gamma = alpha_2
    with pytest.raises(DomainError):
        from_weyl(gr24, rs.reflection(0))


def test_dual_grassmannian(gr24, gr36):
    assert dual(gr24, shape(gr24, 1)) == shape(gr24, 2, 1)
    assert dual(gr24, Shape(0)) == gr24.full
    assert dual(gr36, shape(gr36, 3, 1)) == shape(gr36, 3, 2)
    assert dual(gr36, shape(gr36, 2, 1)) == shape(gr36, 3, 2, 1)


def test_dual_is_involution(small_poset):
    for s in enumerate_shapes(small_poset):
        d = dual(small_poset, s)
        assert d.length == small_poset.dim - s.length
        assert dual(small_poset, d) == s


@settings(max_examples=60, deadline=None)
@given(moves=st.lists(st.tuples(st.booleans(), st.integers(min_value=0, max_value=50)), max_size=40))
def test_random_box_mutations_keep_ideals(moves):
    poset = poset_of(SpaceKind.LG, 4)
    s = Shape(0)
    for grow, pick in moves:
        options = addable_boxes(poset, s) if grow else removable_boxes(poset, s)
        if not options:
            continue
        box = options[pick % len(options)]
        s = add_box(poset, s, box) if grow else remove_box(poset, s, box)
        assert is_ideal(poset, s.bits)
    assert s in enumerate_shapes(poset)

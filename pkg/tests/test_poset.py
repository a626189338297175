import pytest

from core.errors import ConfigurationError
from core.models import Family, SpaceKind
from core.poset import build_poset, build_space, quadric

from conftest import poset_of


@pytest.mark.parametrize("kind,params,family,rank,gamma", [
    (SpaceKind.GR, (2, 4), Family.A, 3, 1),
    (SpaceKind.LG, (4,), Family.C, 4, 3),
    (SpaceKind.OG, (5,), Family.D, 5, 4),
    (SpaceKind.QUAD_ODD, (7,), Family.B, 4, 0),
    (SpaceKind.QUAD_EVEN, (8,), Family.D, 5, 0),
    (SpaceKind.E6P6, (), Family.E6, 6, 5),
    (SpaceKind.E7P7, (), Family.E7, 7, 6),
])
def test_build_space(kind, params, family, rank, gamma):
    space = build_space(kind, *params)
    assert (space.family, space.rank, space.gamma_index) == (family, rank, gamma)


@pytest.mark.parametrize("kind,params", [
    (SpaceKind.GR, (3, 3)),
    (SpaceKind.GR, (0, 4)),
    (SpaceKind.LG, (1,)),
    (SpaceKind.OG, (2,)),
    (SpaceKind.QUAD_ODD, (6,)),
    (SpaceKind.QUAD_EVEN, (5,)),
])
def test_build_space_rejects_bad_parameters(kind, params):
    with pytest.raises(ConfigurationError):
        build_space(kind, *params)


def test_quadric_picks_parity():
    assert quadric(9).kind == SpaceKind.QUAD_ODD
    assert quadric(10).kind == SpaceKind.QUAD_EVEN


@pytest.mark.parametrize("kind,params,dim", [
    (SpaceKind.GR, (3, 7), 12),
    (SpaceKind.LG, (6,), 21),
    (SpaceKind.OG, (6,), 15),
    (SpaceKind.QUAD_ODD, (11,), 11),
    (SpaceKind.QUAD_EVEN, (10,), 10),
    (SpaceKind.E6P6, (), 16),
    (SpaceKind.E7P7, (), 27),
])
def test_dimensions(kind, params, dim):
    assert build_space(kind, *params).dim == dim
    assert poset_of(kind, *params).dim == dim


def test_grassmannian_grid(gr37):
    assert gr37.rows == 3
    assert all(not b.is_short for b in gr37.boxes)
    # z1 é o gancho (4,1,1)
    assert gr37.z1.length == 6
    assert all(b.grid_pos[0] == 0 or b.grid_pos[1] == 0
               for b in gr37.boxes if b.index in gr37.z1)


def test_grassmannian_delta_labels(gr37):
    k = 3
    for b in gr37.boxes:
        i, j = b.grid_pos
        # rótulo de conteúdo alpha_{k-i+j} com índices base 1
        assert b.delta == k - 1 - i + j


def test_lagrangian_long_boxes_on_diagonal():
    poset = poset_of(SpaceKind.LG, 6)
    for b in poset.boxes:
        r, c = b.grid_pos
        assert b.is_short == (r != c)
    assert poset.z1.length == 6
    assert all(b.grid_pos[0] == 0 for b in poset.boxes if b.index in poset.z1)


def test_odd_quadric_only_middle_box_is_short():
    poset = build_poset(quadric(11))
    shorts = [b.grid_pos for b in poset.boxes if b.is_short]
    # e_1 é a única raiz curta com coeficiente 1 em alpha_1
    assert shorts == [(0, 5)]
    assert poset.z1.length == 10


def test_e7_z1(e7):
    assert e7.z1.length == 17


def test_e6_z1(e6):
    assert e6.z1.length == 11


def test_minimal_box_is_gamma(small_poset):
    first = small_poset.boxes[0]
    gamma = small_poset.space.gamma_index
    assert first.root_index == gamma
    assert first.delta == gamma


def test_delta_preserves_length(small_poset):
    rs = small_poset.root_system
    for b in small_poset.boxes:
        assert rs.is_short(b.delta) == b.is_short


def test_minuscule_spaces_have_no_short_boxes(small_poset):
    if small_poset.is_minuscule:
        assert not any(b.is_short for b in small_poset.boxes)


def test_leq_matches_grid(small_poset):
    for a in small_poset.boxes:
        for b in small_poset.boxes:
            grid = a.grid_pos[0] <= b.grid_pos[0] and a.grid_pos[1] <= b.grid_pos[1]
            assert bool(small_poset.leq[a.index][b.index]) == grid


def test_build_poset_is_cached():
    space = build_space(SpaceKind.GR, 2, 5)
    assert build_poset(space) is build_poset(space)


def test_lagrangian_three_grid(lg3):
    # e1+e3 e 2e2 são incomparáveis no mesmo posto: a norma decide a célula
    roots = {b.grid_pos: tuple(b.root) for b in lg3.boxes}
    assert roots == {
        (0, 0): (0, 0, 1),
        (0, 1): (0, 1, 1),
        (0, 2): (1, 1, 1),
        (1, 1): (0, 2, 1),
        (1, 2): (1, 2, 1),
        (2, 2): (2, 2, 1),
    }
    assert [b.grid_pos for b in lg3.boxes if not b.is_short] == [(0, 0), (1, 1), (2, 2)]
    assert {b.grid_pos for b in lg3.boxes if b.index in lg3.z1} == {(0, 0), (0, 1), (0, 2)}


@pytest.mark.parametrize("n", [3, 4, 5])
def test_lagrangian_first_box_of_each_row_is_long(n):
    poset = poset_of(SpaceKind.LG, n)
    for b in poset.boxes:
        assert b.is_short == (b.grid_pos[0] != b.grid_pos[1])


def test_odd_quadric_norm_layout():
    # o desenho da cadeia com caixas 2 a 10 curtas não confere com as normas de B_6:
    # só e_1 é curta, e as pontas e_1 - e_2 e e_1 + e_2 são longas
    poset = build_poset(quadric(11))
    rs = poset.root_system
    assert [b.is_short for b in poset.boxes] == [i == 5 for i in range(11)]
    assert tuple(poset.boxes[5].root) == (1, 1, 1, 1, 1, 1)
    assert not poset.boxes[0].is_short and not poset.boxes[10].is_short
    assert all(rs.is_short(b.root_index) == b.is_short for b in poset.boxes)

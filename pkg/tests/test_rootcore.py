import numpy as np
import pytest

from core.errors import ConfigurationError
from core.grassq import sl_to_gl
from core.models import Family
from core.rootcore import build_root_system, inversions, length, longest_element, reflect


@pytest.mark.parametrize("family,rank,count", [
    (Family.A, 3, 6),
    (Family.B, 4, 16),
    (Family.C, 4, 16),
    (Family.D, 5, 20),
    (Family.E6, 6, 36),
    (Family.E7, 7, 63),
])
def test_positive_root_counts(family, rank, count):
    assert len(build_root_system(family, rank).positive_roots) == count


def test_simple_roots_come_first():
    rs = build_root_system(Family.D, 5)
    for i in range(rs.rank):
        assert rs.positive_roots[i] == tuple(1 if j == i else 0 for j in range(rs.rank))


def test_type_c_long_roots_are_twice_e_i():
    rs = build_root_system(Family.C, 4)
    longs = [i for i in range(len(rs.positive_roots)) if not rs.is_short(i)]
    assert len(longs) == 4
    assert rs.is_short(0) and not rs.is_short(3)


def test_type_b_short_roots():
    rs = build_root_system(Family.B, 4)
    shorts = [i for i in range(len(rs.positive_roots)) if rs.is_short(i)]
    # e_1, ..., e_4
    assert len(shorts) == 4
    assert rs.is_short(3) and not rs.is_short(0)


def test_simply_laced_has_no_short_roots():
    rs = build_root_system(Family.E6, 6)
    assert rs.is_simply_laced
    assert not any(rs.is_short(i) for i in range(len(rs.positive_roots)))


def test_simple_reflection_on_fundamental_weight():
    rs = build_root_system(Family.A, 3)
    for i in range(rs.rank):
        omega = rs.fundamental_weight(i)
        expected = tuple(a - b for a, b in zip(omega, rs.simple_root_weight(i)))
        assert rs.reflection(i).apply(omega) == expected


def test_reflection_fixes_orthogonal_weight():
    rs = build_root_system(Family.A, 3)
    # <omega_3, alpha_1^vee> = 0
    assert reflect(rs, 0, rs.fundamental_weight(2)) == rs.fundamental_weight(2)


def test_sl4_reflection_in_gl_coordinates():
    rs = build_root_system(Family.A, 3)
    image = rs.reflection(1).apply(rs.fundamental_weight(1))
    assert image == (1, -1, 1)
    assert sl_to_gl(image) == (1, 0, 1, 0)


def test_inversions_and_length():
    rs = build_root_system(Family.A, 3)
    assert inversions(rs, rs.identity()) == frozenset()
    assert inversions(rs, rs.reflection(1)) == frozenset({1})
    w0 = longest_element(rs, range(rs.rank))
    assert length(rs, w0) == 6


@pytest.mark.parametrize("family,rank", [(Family.B, 3), (Family.C, 4), (Family.E7, 7)])
def test_weyl_action_preserves_norms(family, rank):
    rs = build_root_system(family, rank)
    for i in range(rs.rank):
        s = rs.reflection(i)
        for r in range(len(rs.positive_roots)):
            image, _ = rs.act_on_root(s, r)
            assert rs.root_norms[image] == rs.root_norms[r]


def test_longest_element_is_involution():
    rs = build_root_system(Family.D, 4)
    w0 = longest_element(rs, range(rs.rank))
    assert (w0 * w0).is_identity()
    assert length(rs, w0) == len(rs.positive_roots)


def test_cartan_matrix_double_bonds():
    b = build_root_system(Family.B, 3).cartan
    c = build_root_system(Family.C, 3).cartan
    assert b[2][1] == -2 and b[1][2] == -1
    assert c[1][2] == -2 and c[2][1] == -1
    assert np.array_equal(b.T, c)


@pytest.mark.parametrize("family,rank", [(Family.E6, 5), (Family.D, 2), (Family.A, 0)])
def test_unsupported_root_system(family, rank):
    with pytest.raises(ConfigurationError):
        build_root_system(family, rank)


def test_longest_element_rejects_bad_subset():
    rs = build_root_system(Family.A, 2)
    with pytest.raises(ConfigurationError):
        longest_element(rs, [5])

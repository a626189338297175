import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.errors import DomainError
from core.gammaring import J_weight
from core.grassq import (
    det_character, dets_detq_check, detq_product, detq_sign_failures, gl_lift_J, gl_monomial,
    gl_to_sl, grass_perm, lambda_character, sl_to_gl, weyl_to_permutation,
)
from core.qkcore import QPoly
from core.shapes import enumerate_shapes, to_partition, to_weyl

from conftest import shape


def test_grass_perm_examples():
    assert str(grass_perm(2, 4, [])) == "1234"
    assert str(grass_perm(2, 4, [2, 2])) == "3412"
    perm = grass_perm(3, 7, [3, 2])
    assert str(perm) == "1462357"
    assert perm.I == (1, 4, 6)
    assert perm.J == (2, 3, 5, 7)


@pytest.mark.parametrize("lam", [[3], [1, 2], [1, 1, 1], [-1]])
def test_grass_perm_rejects(lam):
    with pytest.raises(DomainError):
        grass_perm(2, 4, lam)


def test_lambda_character():
    assert lambda_character(3, 7, [3, 2]) == gl_monomial(7, [2, 3, 5, 7])
    assert lambda_character(3, 7, [3, 2]).format(gl=True) == "T2*T3*T5*T7"
    assert det_character(3).format(gl=True) == "T1*T2*T3"


def test_detq_grassmannian_2_4():
    expr = detq_product(2, 4, [1])
    expected = {
        (2, 2): ([1, 2], 0),
        (2, 1): ([1, 3], 0),
        (2,): ([2, 3], 0),
        (1, 1): ([1, 4], 0),
        (1,): ([2, 4], 0),
        (): ([3, 4], 1),
    }
    got = {tuple(to_partition(expr.poset, s)): c for s, c in expr.terms.items()}
    assert set(got) == set(expected)
    for lam, (indices, degree) in expected.items():
        assert got[lam] == QPoly.constant(gl_monomial(4, indices), degree)


@pytest.mark.parametrize("k,n", [(k, n) for n in range(3, 8) for k in range(1, n)])
def test_detq_coefficients_are_single_characters(k, n):
    assert detq_sign_failures(k, n) == []


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_dets_detq_identity(k, n):
    assert dets_detq_check(k, n)


def test_gl_lift_matches_J(gr24, gr37):
    for poset, (k, n) in ((gr24, (2, 4)), (gr37, (3, 7))):
        for s in enumerate_shapes(poset):
            lam = to_partition(poset, s)
            assert gl_to_sl(gl_lift_J(k, n, lam)) == J_weight(poset, s)


def test_weyl_to_permutation(gr24, gr36):
    rs = gr24.root_system
    assert weyl_to_permutation(rs.identity()) == (1, 2, 3, 4)
    assert weyl_to_permutation(rs.reflection(0)) == (2, 1, 3, 4)
    for poset, (k, n) in ((gr24, (2, 4)), (gr36, (3, 6))):
        for s in enumerate_shapes(poset):
            lam = to_partition(poset, s)
            assert weyl_to_permutation(to_weyl(poset, s)) == grass_perm(k, n, lam).one_line


def test_gl_to_sl_example(gr24):
    assert sl_to_gl((1, -1, 1)) == (1, 0, 1, 0)
    assert gl_to_sl((1, 0, 1, 0)) == (1, -1, 1)
    # a identidade ignora o traço
    assert gl_to_sl((2, 1, 2, 1)) == (1, -1, 1)
    assert J_weight(gr24, shape(gr24, 1)) == gl_to_sl((0, -1, 1, 0))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=7))
def test_sl_gl_bridge(c):
    assert gl_to_sl(sl_to_gl(c)) == tuple(c)
    assert sl_to_gl(c)[-1] == 0

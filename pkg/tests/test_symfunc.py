import pytest

from skewschubert.perm import Permutation, grassmannian_permutation
from skewschubert.poly import Polynomial, complete, elementary
from skewschubert.schubert import schubert_poly
from skewschubert.symfunc import (NotGrassmannian, grassmannian_bridge, lr_coefficients,
                                  partitions_in_box, schur_expand, semistandard_tableaux,
                                  skew_cells, skew_schur_jt, skew_schur_ssyt)


def test_partitions_in_box():
    assert len(partitions_in_box(2, 2)) == 6
    assert len(partitions_in_box(3, 3)) == 20


def test_small_schur():
    assert skew_schur_jt((1, 1), (), 3) == elementary(2, 3)
    assert skew_schur_jt((2,), (), 3) == complete(2, 3)
    assert skew_schur_jt((2, 1), (1,), 2) == Polynomial.parse("x1^2 + 2*x1*x2 + x2^2")


def test_more_rows_than_variables():
    assert skew_schur_jt((1, 1, 1), (), 2) == Polynomial()
    assert skew_schur_ssyt((1, 1, 1), (), 2) == Polynomial()


def test_tableaux_count():
    # SSYT of shape (2,1) with entries <= 3
    assert sum(1 for _ in semistandard_tableaux((2, 1), (), 3)) == 8


def test_skew_cells():
    assert skew_cells((3, 1), (1,)) == [(0, 1), (0, 2), (1, 0)]


def test_lr_examples():
    assert lr_coefficients((2, 1), (1,)) == {(2,): 1, (1, 1): 1}
    assert lr_coefficients((3, 2, 1), (2, 1)).get((2, 1)) == 2
    with pytest.raises(ValueError):
        lr_coefficients((1,), (2,))


def test_lr_matches_schur_product():
    n = 3
    for mu in [(1,), (2, 1), (1, 1)]:
        for nu in [(1,), (2,), (1, 1)]:
            prod = skew_schur_jt(mu, (), n) * skew_schur_jt(nu, (), n)
            expansion = schur_expand(prod, n)
            for lam, c in expansion.items():
                assert lr_coefficients(lam, mu).get(tuple(nu), 0) == c


def test_grassmannian_schubert_is_schur():
    n, r = 5, 2
    for lam in partitions_in_box(r, n - r):
        w = grassmannian_permutation(lam, r, n)
        assert schubert_poly(w) == skew_schur_jt(lam, (), r)


def test_bridge_example():
    n, r = 4, 2
    u = grassmannian_permutation((1,), r, n)
    for lam in [(2,), (1, 1)]:
        w = grassmannian_permutation(lam, r, n)
        assert grassmannian_bridge(u, u, w) == (1, 1)
    v = grassmannian_permutation((2, 1), r, n)
    w = grassmannian_permutation((2, 2), r, n)
    assert grassmannian_bridge(u, v, w) == (1, 1)


def test_bridge_rejects_non_grassmannian():
    with pytest.raises(NotGrassmannian):
        grassmannian_bridge(Permutation((2, 1, 4, 3)), Permutation(()), Permutation((2, 1, 4, 3)))

from itertools import product

import pytest

from skewschubert.divdiff import isobaric_i
from skewschubert.perm import Permutation, all_permutations, bruhat_leq, compose, reduced_words
from skewschubert.poly import Polynomial, permute_variables, staircase
from skewschubert.schubert import schubert_poly
from skewschubert.skewdiff import NotBruhatBelow, skew_apply
from skewschubert.skewkey import (Composition, key_polynomial, skew_key, skew_schubert,
                                  sorting_permutation)
from skewschubert.symfunc import skew_schur_ssyt

P = Polynomial.parse


def test_key_examples():
    assert key_polynomial((2, 1)) == P("x1^2*x2")
    assert key_polynomial((0, 1)) == P("x1 + x2")
    assert key_polynomial((0, 0, 2)) == P("x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2")
    assert key_polynomial((1, 0, 2)) == P("x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2")


def test_sorting_permutation_convention():
    for alpha in product(range(3), repeat=3):
        w = sorting_permutation(alpha)
        lam = tuple(sorted(alpha, reverse=True))
        assert permute_variables(w, Polynomial.monomial(lam)) == Polynomial.monomial(alpha)
        shortest = min(u.length() for u in all_permutations(3)
                       if permute_variables(u, Polynomial.monomial(lam)) == Polynomial.monomial(alpha))
        assert w.length() == shortest


def test_antidominant_key_is_schur():
    for lam in [(2, 1, 0), (3, 1, 1), (2, 2, 0), (3, 2, 1)]:
        assert key_polynomial(tuple(reversed(lam))) == skew_schur_ssyt(lam, (), 3)


def test_key_recursion():
    for alpha in product(range(3), repeat=3):
        for i in (1, 2):
            if alpha[i - 1] > alpha[i]:
                swapped = list(alpha)
                swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
                assert isobaric_i(i, key_polynomial(alpha)) == key_polynomial(swapped)


def test_skew_key_bottom_identity_is_key():
    for alpha in product(range(3), repeat=3):
        assert skew_key(alpha, Permutation.identity()) == key_polynomial(alpha)


def test_skew_key_example():
    v = Permutation((2, 1))
    assert skew_key((0, 1, 2), v) == P(
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + 2*x1*x3^2 + x2*x3^2")


def test_skew_key_depends_on_word():
    # frozen finding: unlike the divided difference case, the isobaric skew
    # construction changes with the reduced word
    v = Permutation((2, 1))
    a = skew_key((0, 1, 2), v, (1, 2, 1))
    b = skew_key((0, 1, 2), v, (2, 1, 2))
    assert a == P("x1^2*x2 + x1^2*x3 + x1*x2^2 + 2*x1*x2*x3 + 2*x1*x3^2 + x2*x3^2")
    assert b == P("x1^2*x2 + x1^2*x3 + x1*x2*x3 + x1*x3^2 + x2*x3^2")
    v = Permutation((1, 3, 2))
    assert skew_key((0, 1, 2), v, (1, 2, 1)) != skew_key((0, 1, 2), v, (2, 1, 2))


def test_skew_key_word_dependence_is_rare_and_positive():
    dependent = []
    for alpha in product(range(3), repeat=3):
        w = sorting_permutation(alpha)
        for v in all_permutations(3):
            if not bruhat_leq(v, w):
                continue
            values = {skew_key(alpha, v, word) for word in sorted(reduced_words(w))}
            assert all(f.is_nonnegative() for f in values)
            if len(values) > 1:
                dependent.append((alpha, v))
    assert sorted(dependent) == sorted([((0, 1, 2), Permutation((2, 1))),
                                        ((0, 1, 2), Permutation((1, 3, 2)))])


def test_skew_key_requires_bruhat():
    with pytest.raises(NotBruhatBelow):
        skew_key((1, 0), Permutation((1, 3, 2)))


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition((1, -1))
    assert Composition((0, 2, 1)).partition() == (2, 1, 0)


def test_skew_schubert_examples():
    w, v = Permutation((3, 2, 4, 1)), Permutation((2, 1))
    assert skew_schubert(w, v, 4) == P("x1^2*x2 + x1*x2*x4 + x2*x4^2")
    # single cover: d_13 of the staircase
    w, v = Permutation((1, 4, 2, 3)), Permutation((1, 2, 4, 3))
    assert skew_schubert(w, v, 4) == P("x1^2*x2^2*x3 + x1*x2^2*x3^2")


def test_skew_schubert_degree_and_positivity():
    n = 4
    N = n * (n - 1) // 2
    for w in all_permutations(n):
        for v in all_permutations(n):
            if bruhat_leq(v, w):
                f = skew_schubert(w, v, n)
                assert f.is_nonnegative()
                assert f.is_homogeneous() and f.degree() == N - w.length() + v.length()


def test_skew_schubert_definition():
    n = 4
    w0 = Permutation.longest(n)
    w, v = Permutation((3, 1, 4, 2)), Permutation((1, 3, 2))
    top = compose(v.inverse(), w0)
    bottom = compose(w.inverse(), w0)
    assert skew_schubert(w, v, n) == skew_apply(top, bottom, staircase(n))
    assert skew_schubert(w0, Permutation.identity(), n) == schubert_poly(Permutation.identity())

from hypothesis import given, settings, strategies as st

from skewschubert.identities import (check_isobaric_braid, check_leibniz,
                                     check_leibniz_skew, check_leibniz_skew_identity_bottom,
                                     check_relations, check_w0_conjugation, check_w0_product,
                                     check_w0_twist, check_word_independence)
from skewschubert.divdiff import ddiff_perm
from skewschubert.perm import Permutation, all_permutations, bruhat_leq
from skewschubert.poly import Polynomial, permute_variables
from skewschubert.skewdiff import skew_apply

N = 3
exp_st = st.tuples(*[st.integers(0, 3)] * N)
poly_st = st.dictionaries(exp_st, st.integers(-3, 3), max_size=4).map(Polynomial)
perm_st = st.sampled_from(all_permutations(N))
pair_st = st.sampled_from([(w, v) for w in all_permutations(N)
                           for v in all_permutations(N) if bruhat_leq(v, w)])
SLOW = settings(max_examples=60, deadline=None)


@SLOW
@given(poly_st, poly_st, st.sampled_from([(i, j) for i in range(1, N + 1)
                                           for j in range(1, N + 1) if i != j]))
def test_leibniz(f, g, ij):
    assert check_leibniz(*ij, f, g)


@SLOW
@given(perm_st, poly_st, poly_st)
def test_leibniz_skew_bottom(w, f, g):
    assert check_leibniz_skew_identity_bottom(w, f, g, N)


def test_untwisted_product_rule_fails():
    # without the v-twist on the first factor the product rule breaks
    w = Permutation((2, 1))
    f, g = Polynomial.parse("x1"), Polynomial.parse("x1")
    rhs = Polynomial()
    for v in all_permutations(2):
        rhs = rhs + skew_apply(w, v, f) * ddiff_perm(v, g)
    assert ddiff_perm(w, f * g) != rhs
    twisted = Polynomial()
    for v in all_permutations(2):
        twisted = twisted + permute_variables(v, skew_apply(w, v, f)) * ddiff_perm(v, g)
    assert ddiff_perm(w, f * g) == twisted


@SLOW
@given(pair_st, poly_st, poly_st)
def test_leibniz_skew(pair, f, g):
    w, u = pair
    assert check_leibniz_skew(w, u, f, g, N)


@SLOW
@given(perm_st, poly_st)
def test_w0_twist(v, f):
    assert check_w0_twist(v, f, N)


@SLOW
@given(poly_st, poly_st)
def test_w0_product(f, g):
    assert check_w0_product(f, g, N)


@SLOW
@given(perm_st, poly_st)
def test_w0_conjugation(w, f):
    assert check_w0_conjugation(w, f, N)


@SLOW
@given(poly_st)
def test_relations(f):
    assert check_relations(f, N)
    assert check_isobaric_braid(f, N)


@SLOW
@given(pair_st, poly_st)
def test_word_independence(pair, f):
    w, v = pair
    assert check_word_independence(w, v, f)

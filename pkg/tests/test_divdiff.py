import pytest
import sympy
from hypothesis import given, strategies as st

from skewschubert.divdiff import (ddiff_i, ddiff_ij, ddiff_perm, ddiff_word,
                                  divide_by_difference, isobaric_i, isobaric_word)
from skewschubert.perm import Permutation, reduced_words
from skewschubert.poly import Polynomial

NV = 4
exp_st = st.tuples(*[st.integers(0, 4)] * NV)
poly_st = st.dictionaries(exp_st, st.integers(-4, 4), max_size=5).map(Polynomial)
pair_st = st.tuples(st.integers(1, NV), st.integers(1, NV)).filter(lambda p: p[0] != p[1])
X = sympy.symbols(f"x1:{NV + 1}")


def to_sympy(f):
    return sum((c * sympy.prod([X[i] ** e for i, e in enumerate(exp)])
                for exp, c in f.items()), sympy.Integer(0))


@given(poly_st, pair_st)
def test_ddiff_matches_rational_formula(f, ij):
    i, j = ij
    expr = to_sympy(f)
    swapped = expr.subs({X[i - 1]: X[j - 1], X[j - 1]: X[i - 1]}, simultaneous=True)
    expected = sympy.cancel((expr - swapped) / (X[i - 1] - X[j - 1]))
    assert sympy.expand(expected - to_sympy(ddiff_ij(i, j, f))) == 0


@given(poly_st, pair_st)
def test_ddiff_antisymmetric_and_nil(f, ij):
    i, j = ij
    assert ddiff_ij(j, i, f) == -ddiff_ij(i, j, f)
    assert ddiff_ij(i, j, ddiff_ij(i, j, f)) == Polynomial()


@given(poly_st)
def test_isobaric_idempotent(f):
    for i in range(1, NV):
        once = isobaric_i(i, f)
        assert isobaric_i(i, once) == once


def test_examples():
    f = Polynomial.parse("x1^3*x2*x3")
    assert ddiff_ij(1, 3, f) == Polynomial.parse("x1^2*x2*x3 + x1*x2*x3^2")
    assert ddiff_i(1, Polynomial.parse("x1")) == Polynomial.const(1)
    assert ddiff_i(2, Polynomial.parse("x1")) == Polynomial()
    assert isobaric_i(1, Polynomial.parse("x1^2")) == Polynomial.parse("x1^2 + x1*x2 + x2^2")


def test_division_raises_on_remainder():
    with pytest.raises(ArithmeticError):
        divide_by_difference(Polynomial.parse("x1"), 1, 2)


def test_word_order_rightmost_first():
    f = Polynomial.parse("x1^2*x2")
    assert ddiff_word((1, 2), f) == ddiff_i(1, ddiff_i(2, f))
    assert isobaric_word((2, 1), f) == isobaric_i(2, isobaric_i(1, f))


def test_ddiff_perm_independent_of_word():
    f = Polynomial.parse("x1^3*x2^2*x3 - 4*x1*x4^3")
    w = Permutation((3, 4, 1, 2))
    values = {ddiff_word(a, f) for a in reduced_words(w)}
    assert values == {ddiff_perm(w, f)}

import random

import pytest
import sympy

from skewschubert.perm import Permutation, all_permutations, compose
from skewschubert.poly import Polynomial, elementary, staircase
from skewschubert.schubert import (SchubertExpansion, constants_by_product, pairing0,
                                   reduce_mod_ideal, schubert_by_definition, schubert_expand,
                                   schubert_poly)
from skewschubert.identities import random_polynomial

P = Polynomial.parse


def perm(s):
    return Permutation(map(int, s))


def to_sympy(f, xs):
    return sum((c * sympy.prod([xs[i] ** e for i, e in enumerate(exp)])
                for exp, c in f.items()), sympy.Integer(0))


def test_known_values():
    assert schubert_poly(perm("1342")) == elementary(2, 3)
    assert schubert_poly(perm("4231")) == P("x1^3*x2*x3")
    assert schubert_poly(perm("2143")) == P("x1^2 + x1*x2 + x1*x3")
    assert schubert_poly(perm("4321")) == staircase(4)
    assert schubert_poly(Permutation.identity()) == Polynomial.const(1)


def test_memo_matches_definition():
    for w in all_permutations(5):
        assert schubert_poly(w) == schubert_by_definition(w, 5)


def test_stable_under_embedding():
    for w in all_permutations(4):
        assert schubert_by_definition(w, 4) == schubert_by_definition(w, 5)


def test_schubert_polys_are_positive_and_homogeneous():
    for w in all_permutations(5):
        f = schubert_poly(w)
        assert f.is_nonnegative()
        assert f.is_homogeneous() and f.degree() == w.length()


def test_expansion_of_schubert_is_itself():
    for w in all_permutations(4):
        assert schubert_expand(schubert_poly(w), 4) == SchubertExpansion(4, {w: 1})


def test_worked_expansion():
    out = P("x1^2 + x1*x4 + x4^2")
    exp = schubert_expand(out, 4)
    assert str(exp) == "S[1342] - S[2143] + S[3124]"
    exp2 = schubert_expand(P("x1^2*x2 + x1*x2*x4 + x2*x4^2"), 4)
    assert str(exp2) == "S[1432] - S[2341] - S[2413] - S[3142] + S[3214]"


def test_expand_rejects_extra_variables():
    with pytest.raises(ValueError):
        schubert_expand(P("x5"), 4)


def test_reduce_mod_ideal_against_groebner():
    n = 4
    xs = sympy.symbols(f"x1:{n + 1}")
    gens = [to_sympy(elementary(k, n), xs) for k in range(1, n + 1)]
    basis = sympy.groebner(gens, *xs, order="grevlex")
    rng = random.Random(3)
    for _ in range(15):
        f = random_polynomial(rng, n, max_degree=7, terms=5)
        red = reduce_mod_ideal(f, n)
        _, rem = basis.reduce(sympy.expand(to_sympy(f - red, xs)))
        assert rem == 0
        # the reduction lives in the span of Schubert polynomials of S_n
        assert red.degree() <= n * (n - 1) // 2


def test_symmetric_polynomials_vanish():
    assert reduce_mod_ideal(elementary(2, 4) * P("x1 + 3"), 4) == Polynomial()
    assert reduce_mod_ideal(P("7"), 4) == P("7")


def test_pairing_is_dual():
    n = 3
    w0 = Permutation.longest(n)
    for u in all_permutations(n):
        for v in all_permutations(n):
            expect = 1 if v == compose(w0, u) else 0
            assert pairing0(schubert_poly(u), schubert_poly(v), n) == expect


def test_product_constants_examples():
    c = constants_by_product(perm("213"), perm("213"), 3)
    assert dict(c.items()) == {perm("312"): 1}
    # Monk: S_s2 * S_s2 in S_3
    c = constants_by_product(perm("132"), perm("132"), 3)
    assert dict(c.items()) == {perm("231"): 1}


def test_product_constants_nonnegative():
    for u in all_permutations(4):
        for v in all_permutations(4):
            assert all(c >= 0 for _, c in constants_by_product(u, v, 4).items())

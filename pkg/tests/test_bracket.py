from skewschubert.bracket import (BracketElement, BracketMonomial, conjugate, normalize_pair,
                                  operator_equal, rewrite_moves, rewrite_search, skew_element,
                                  to_operator)
from skewschubert.perm import Permutation, all_permutations, bruhat_leq, from_word
from skewschubert.poly import monomials_up_to
from skewschubert.skewdiff import skew_apply

W = from_word((2, 1, 3, 2, 1))
V = from_word((2, 1))


def test_worked_element():
    e = skew_element(W, V)
    assert str(e) == "[34][23][12] - [12][34][13] - [13][23][14]"


def test_worked_search():
    res = rewrite_search(skew_element(W, V), depth=8)
    assert str(res.found) == "[14][34][23]"
    assert res.steps == 4
    assert res.path[0] == skew_element(W, V) and res.path[-1] == res.found


def test_sign_rule_and_conjugation():
    assert normalize_pair(3, 1) == ((1, 3), -1)
    m = BracketMonomial(((1, 2),))
    assert conjugate(Permutation((2, 1)), m) == BracketMonomial(((1, 2),), -1)


def test_action_matches_skew_operator():
    monos = monomials_up_to(4, 4)
    perms = all_permutations(4)
    for w in perms:
        for v in perms:
            if bruhat_leq(v, w):
                op = to_operator(skew_element(w, v))
                assert all(op(f) == skew_apply(w, v, f) for f in monos[::3])


def test_rewrites_preserve_action():
    e = skew_element(W, V)
    frontier = [e]
    for _ in range(2):
        frontier = [m for x in frontier for m in rewrite_moves(x)]
        for x in frontier:
            assert operator_equal(x, e, nvars=4, degree=5)


def test_relation_identities_hold_as_operators():
    g = BracketElement.generator
    lhs = g(1, 2) * g(2, 3)
    rhs = g(2, 3) * g(1, 3) + g(1, 3) * g(1, 2)
    assert operator_equal(lhs, rhs, nvars=3, degree=4)
    lhs = g(2, 3) * g(1, 2)
    rhs = g(1, 3) * g(2, 3) + g(1, 2) * g(1, 3)
    assert operator_equal(lhs, rhs, nvars=3, degree=4)
    assert operator_equal(g(1, 2) * g(3, 4), g(3, 4) * g(1, 2), nvars=4, degree=3)
    assert operator_equal(g(1, 2) * g(1, 2), BracketElement(), nvars=3, degree=4)


def test_budget_exhaustion_reported():
    e = skew_element(W, V)
    res = rewrite_search(e, depth=1)
    assert res.exhausted and res.found is None


def test_all_s4_pairs_have_nonnegative_forms():
    perms = all_permutations(4)
    worst = 0
    for w in perms:
        for v in perms:
            if bruhat_leq(v, w):
                res = rewrite_search(skew_element(w, v), depth=8)
                assert not res.exhausted, (w, v)
                worst = max(worst, res.steps)
    assert worst <= 8

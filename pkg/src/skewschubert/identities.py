"""
Operator identities as executable predicates.

Each ``check_*`` function takes explicit inputs and returns ``True`` when the
identity holds on them. :data:`RANDOM_CHECKS` wraps them with a random-input
generator so the sweep harness can run them by name.
"""

from __future__ import annotations

import random
from typing import Callable

from .divdiff import ddiff_ij, ddiff_perm, ddiff_word, isobaric_word
from .perm import (Permutation, all_permutations, bruhat_leq, compose,
                   reduced_words)
from .poly import Polynomial, permute_variables
from .skewdiff import leibnitz_expand, skew_apply

__all__ = [
    "random_polynomial", "check_leibniz", "check_leibniz_skew_identity_bottom",
    "check_leibniz_skew", "check_w0_twist", "check_w0_product",
    "check_w0_conjugation", "check_relations", "check_isobaric_braid",
    "check_word_independence", "RANDOM_CHECKS",
]


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 4,
                      terms: int = 4, coeff: int = 3) -> Polynomial:
    out: dict[tuple[int, ...], int] = {}
    for _ in range(terms):
        exp = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exp[rng.randrange(nvars)] += 1
        out[tuple(exp)] = out.get(tuple(exp), 0) + rng.randint(-coeff, coeff)
    return Polynomial(out)


def check_leibniz(i: int, j: int, f: Polynomial, g: Polynomial) -> bool:
    """``d_ij(fg) = d_ij(f) g + t_ij(f) d_ij(g)``."""
    return ddiff_ij(i, j, f * g) == ddiff_ij(i, j, f) * g + f.swap(i, j) * ddiff_ij(i, j, g)


def check_leibniz_skew_identity_bottom(w: Permutation, f: Polynomial, g: Polynomial,
                                       n: int) -> bool:
    """``d_w(fg) = sum_{v <= w} v(skew(w/v) f) * d_v g``."""
    rhs = Polynomial()
    for v in all_permutations(n):
        if bruhat_leq(v, w):
            rhs = rhs + permute_variables(v, skew_apply(w, v, f)) * ddiff_perm(v, g)
    return ddiff_perm(w, f * g) == rhs


def check_leibniz_skew(w: Permutation, u: Permutation, f: Polynomial, g: Polynomial,
                       n: int) -> bool:
    """``skew(w/u)(fg) = sum_{u <= v <= w} u^-1 v(skew(w/v) f) * skew(v/u) g``,
    and the chain form of the same sum agrees."""
    lhs = skew_apply(w, u, f * g)
    rhs = Polynomial()
    uinv = u.inverse()
    for v in all_permutations(n):
        if bruhat_leq(u, v) and bruhat_leq(v, w):
            rhs = rhs + permute_variables(compose(uinv, v), skew_apply(w, v, f)) \
                * skew_apply(v, u, g)
    return lhs == rhs and leibnitz_expand(w, u, [f, g]) == permute_variables(u, lhs)


def check_w0_twist(v: Permutation, f: Polynomial, n: int) -> bool:
    """``w0 v (skew(w0/v) f) = d_{w0 v} f``."""
    w0v = compose(Permutation.longest(n), v)
    return permute_variables(w0v, skew_apply(Permutation.longest(n), v, f)) == ddiff_perm(w0v, f)


def check_w0_product(f: Polynomial, g: Polynomial, n: int) -> bool:
    """``d_w0(fg) = sum_w sign(w) d_w(w0 f) d_{w w0}(g)``."""
    w0 = Permutation.longest(n)
    w0f = permute_variables(w0, f)
    rhs = Polynomial()
    for w in all_permutations(n):
        rhs = rhs + (ddiff_perm(w, w0f) * ddiff_perm(compose(w, w0), g)).scale(w.sign())
    return ddiff_perm(w0, f * g) == rhs


def check_w0_conjugation(w: Permutation, f: Polynomial, n: int) -> bool:
    """``d_{w0 w w0} = sign(w) w0 d_w w0``."""
    w0 = Permutation.longest(n)
    lhs = ddiff_perm(compose(compose(w0, w), w0), f)
    rhs = permute_variables(w0, ddiff_perm(w, permute_variables(w0, f))).scale(w.sign())
    return lhs == rhs


def check_relations(f: Polynomial, n: int) -> bool:
    """Nil, commutation and braid relations of ``d_1 .. d_{n-1}`` on ``f``."""
    for i in range(1, n):
        if ddiff_word((i, i), f):
            return False
        for j in range(i + 2, n):
            if ddiff_word((i, j), f) != ddiff_word((j, i), f):
                return False
        if i + 1 < n and ddiff_word((i, i + 1, i), f) != ddiff_word((i + 1, i, i + 1), f):
            return False
    return True


def check_isobaric_braid(f: Polynomial, n: int) -> bool:
    """``pi_i pi_{i+1} pi_i = pi_{i+1} pi_i pi_{i+1}`` and far commutation."""
    for i in range(1, n):
        for j in range(i + 2, n):
            if isobaric_word((i, j), f) != isobaric_word((j, i), f):
                return False
        if i + 1 < n and isobaric_word((i, i + 1, i), f) != isobaric_word((i + 1, i, i + 1), f):
            return False
    return True


def check_word_independence(w: Permutation, v: Permutation, f: Polynomial) -> bool:
    """The skew operator gives the same value on ``f`` for every reduced word of ``w``."""
    values = {skew_apply(w, v, f, word) for word in sorted(reduced_words(w))}
    return len(values) == 1


def _pick(rng: random.Random, n: int) -> Permutation:
    return rng.choice(all_permutations(n))


def _pick_pair(rng: random.Random, n: int) -> tuple[Permutation, Permutation]:
    w = _pick(rng, n)
    below = [v for v in all_permutations(n) if bruhat_leq(v, w)]
    return w, rng.choice(below)


def _poly(rng: random.Random, n: int) -> Polynomial:
    return random_polynomial(rng, n, max_degree=n + 1)


def _rand_leibniz(rng, n):
    i = rng.randint(1, n - 1)
    j = rng.randint(i + 1, n)
    return check_leibniz(i, j, _poly(rng, n), _poly(rng, n))


def _rand_word_independence(rng, n):
    w, v = _pick_pair(rng, n)
    return check_word_independence(w, v, _poly(rng, n))


RANDOM_CHECKS: dict[str, Callable[[random.Random, int], bool]] = {
    "leibniz": _rand_leibniz,
    "leibniz-skew-bottom": lambda rng, n: check_leibniz_skew_identity_bottom(
        _pick(rng, n), _poly(rng, n), _poly(rng, n), n),
    "leibniz-skew": lambda rng, n: check_leibniz_skew(
        *_pick_pair(rng, n), _poly(rng, n), _poly(rng, n), n),
    "w0-twist": lambda rng, n: check_w0_twist(_pick(rng, n), _poly(rng, n), n),
    "w0-product": lambda rng, n: check_w0_product(_poly(rng, n), _poly(rng, n), n),
    "w0-conjugation": lambda rng, n: check_w0_conjugation(_pick(rng, n), _poly(rng, n), n),
    "relations": lambda rng, n: check_relations(_poly(rng, n), n),
    "isobaric-braid": lambda rng, n: check_isobaric_braid(_poly(rng, n), n),
    "word-independence": _rand_word_independence,
}

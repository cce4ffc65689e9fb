"""
Skew divided difference operators.

For ``v <= w`` and a reduced word ``a`` of ``w``, the operator is the sum over
subwords ``b`` of ``a`` that are reduced words of ``v`` of the string
``phi_1 ... phi_p`` (``phi_k`` a variable swap when ``a_k`` is in ``b``, a
divided difference otherwise), followed by the variable permutation ``v^-1``.
Strings act right to left.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TypeVar

from .divdiff import ddiff_i
from .perm import (Permutation, bruhat_interval, bruhat_leq, canonical_word,
                   compose, from_word, reduced_words)
from .poly import Polynomial, permute_variables
from .schubert import schubert_poly

__all__ = [
    "SkewOp", "NotBruhatBelow", "subword_walk", "subword_choices",
    "skew_apply", "skew_apply_with", "constants_by_skew", "leibnitz_expand",
]

S = TypeVar("S")


class NotBruhatBelow(ValueError):
    """Raised when a skew construction is asked for ``w/v`` with ``v`` not below ``w``."""

    def __init__(self, v: Permutation, w: Permutation):
        super().__init__(f"{v} is not below {w} in Bruhat order")
        self.v, self.w = v, w


def subword_walk(word: Sequence[int], v: Permutation, start: S,
                 take: Callable[[int, S], S], skip: Callable[[int, S], S],
                 dead: Optional[Callable[[S], bool]] = None) -> list[S]:
    """Fold ``take``/``skip`` over the subwords of ``word`` spelling ``v`` reducedly.

    Positions are visited right to left. A branch is abandoned as soon as the
    chosen letters can no longer end up as a reduced word of ``v``, or when
    ``dead(state)`` is true. Returns one final state per surviving subword.
    """
    word = tuple(word)
    lv = v.length()
    vinv = v.inverse()
    out: list[S] = []

    def walk(k: int, q: Permutation, state: S) -> None:
        if dead is not None and dead(state):
            return
        need = lv - q.length()
        if k < 0:
            if need == 0 and q == v:
                out.append(state)
            return
        if need > k + 1:
            return
        a = word[k]
        walk(k - 1, q, skip(a, state))
        if need:
            q2 = q.left_mul_simple(a)
            # q2 must stay a right factor of v: l(v q2^-1) = l(v) - l(q2)
            if q2.length() == q.length() + 1 and \
                    compose(q2, vinv).length() == lv - q2.length():
                walk(k - 1, q2, take(a, state))

    walk(len(word) - 1, Permutation.identity(), start)
    return out


def subword_choices(word: Sequence[int], v: Permutation) -> list[tuple[bool, ...]]:
    """Masks marking which positions of ``word`` form a reduced word of ``v``."""
    masks = subword_walk(word, v, (), lambda a, m: (True,) + m, lambda a, m: (False,) + m)
    return sorted(masks, reverse=True)


def skew_apply_with(step: Callable[[int, Polynomial], Polynomial], w: Permutation,
                    v: Permutation, f: Polynomial,
                    word: Optional[Sequence[int]] = None) -> Polynomial:
    """The skew construction with a custom single-step operator (``d_i`` or ``pi_i``)."""
    if not bruhat_leq(v, w):
        raise NotBruhatBelow(v, w)
    if word is None:
        word = canonical_word(w)
    elif len(word) != w.length() or from_word(word) != w:
        raise ValueError(f"{tuple(word)} is not a reduced word of {w}")
    leaves = subword_walk(word, v, f, lambda a, g: g.swap(a, a + 1), step,
                          dead=lambda g: not g)
    total = Polynomial()
    for g in leaves:
        total = total + g
    return permute_variables(v.inverse(), total)


def skew_apply(w: Permutation, v: Permutation, f: Polynomial,
               word: Optional[Sequence[int]] = None) -> Polynomial:
    """Apply the skew divided difference operator for ``w/v`` to ``f``."""
    return skew_apply_with(ddiff_i, w, v, f, word)


@dataclass(frozen=True)
class SkewOp:
    """The operator for ``w/v`` built on a fixed reduced word of ``w``."""

    w: Permutation
    v: Permutation
    word: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not bruhat_leq(self.v, self.w):
            raise NotBruhatBelow(self.v, self.w)
        if self.word is None:
            object.__setattr__(self, "word", canonical_word(self.w))
        elif tuple(self.word) not in reduced_words(self.w):
            raise ValueError(f"{self.word} is not a reduced word of {self.w}")

    def __call__(self, f: Polynomial) -> Polynomial:
        return skew_apply(self.w, self.v, f, self.word)

    def terms(self) -> list[tuple[bool, ...]]:
        return subword_choices(self.word, self.v)


def constants_by_skew(u: Permutation, v: Permutation, w: Permutation) -> Polynomial:
    """The polynomial obtained by applying the ``w/v`` operator to ``S_u``.

    Its constant term is ``c^w_{uv}``; when ``l(u) + l(v) = l(w)`` it is that
    constant outright.
    """
    if not bruhat_leq(v, w):
        raise NotBruhatBelow(v, w)
    return skew_apply(w, v, schubert_poly(u))


def leibnitz_expand(w: Permutation, u: Permutation,
                    factors: Sequence[Polynomial]) -> Polynomial:
    """Sum over chains ``w = v0 >= v1 >= ... >= vN = u`` of
    ``prod_i v_i(skew(v_{i-1}/v_i)(f_i))``.
    """
    if not bruhat_leq(u, w):
        raise NotBruhatBelow(u, w)
    factors = list(factors)
    if not factors:
        return Polynomial.const(1 if u == w else 0)
    n = max(w.n, u.n)
    interval = bruhat_interval(u, w, n)
    total = Polynomial()

    def walk(i: int, prev: Permutation, acc: Polynomial) -> None:
        nonlocal total
        last = i == len(factors) - 1
        for v in ([u] if last else interval):
            if not bruhat_leq(v, prev):
                continue
            piece = permute_variables(v, skew_apply(prev, v, factors[i]))
            if not piece:
                continue
            if last:
                total = total + acc * piece
            else:
                walk(i + 1, v, acc * piece)

    walk(0, w, Polynomial.const(1))
    return total

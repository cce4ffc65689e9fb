"""
Skew Schubert polynomials, key polynomials, and skew key polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .divdiff import isobaric_i, isobaric_perm
from .perm import Permutation, bruhat_leq, compose
from .poly import Polynomial, staircase
from .skewdiff import NotBruhatBelow, skew_apply, skew_apply_with

__all__ = [
    "Composition", "skew_schubert", "key_polynomial", "skew_key", "sorting_permutation",
]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 0 for p in self.parts):
            raise ValueError(f"negative part in {self.parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def partition(self) -> tuple[int, ...]:
        """The weakly decreasing rearrangement (zeros kept)."""
        return tuple(sorted(self.parts, reverse=True))

    def sorting_permutation(self) -> Permutation:
        return sorting_permutation(self.parts)

    def __str__(self) -> str:
        return "c:" + ",".join(map(str, self.parts))


def sorting_permutation(parts: Sequence[int]) -> Permutation:
    """The shortest ``w`` with ``parts[w(i)] = sorted_desc(parts)[i]`` for every ``i``.

    Equivalently ``w(x^lambda) = x^alpha``. A stable sort leaves equal parts in
    their original order, which is what makes ``w`` shortest.
    """
    order = sorted(range(len(parts)), key=lambda i: -parts[i])
    return Permutation(i + 1 for i in order)


def skew_schubert(w: Permutation, v: Permutation, n: int) -> Polynomial:
    """``S_{w/v}``: the skew operator for ``v^-1 w0 / w^-1 w0`` applied to ``x^delta``."""
    if not bruhat_leq(v, w):
        raise NotBruhatBelow(v, w)
    w0 = Permutation.longest(n)
    top = compose(v.embed(n).inverse(), w0)
    bottom = compose(w.embed(n).inverse(), w0)
    return skew_apply(top, bottom, staircase(n))


def key_polynomial(alpha: Composition | Sequence[int]) -> Polynomial:
    """``pi_{w(alpha)}`` applied to ``x^lambda(alpha)``."""
    if not isinstance(alpha, Composition):
        alpha = Composition(tuple(alpha))
    return isobaric_perm(alpha.sorting_permutation(), Polynomial.monomial(alpha.partition()))


def skew_key(alpha: Composition | Sequence[int], v: Permutation,
             word: Optional[Sequence[int]] = None) -> Polynomial:
    """The skew construction with isobaric steps, for ``w(alpha)/v``, on ``x^lambda(alpha)``.

    ``word`` picks the reduced word of ``w(alpha)``; the result is not known
    to be independent of that choice.
    """
    if not isinstance(alpha, Composition):
        alpha = Composition(tuple(alpha))
    w = alpha.sorting_permutation()
    if not bruhat_leq(v, w):
        raise NotBruhatBelow(v, w)
    return skew_apply_with(isobaric_i, w, v, Polynomial.monomial(alpha.partition()), word)

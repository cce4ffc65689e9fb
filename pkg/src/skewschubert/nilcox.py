"""
The nilCoxeter algebra with polynomial coefficients, the factorized Schubert
generating function, and structure constants from weighted Bruhat paths.

``e_u * e_v`` is ``e_{uv}`` when lengths add and zero otherwise, with the same
product convention as :mod:`skewschubert.perm`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Union

from .divdiff import ddiff_ij
from .perm import Permutation, all_permutations, bruhat_leq, compose, lower_covers
from .poly import Polynomial
from .schubert import SchubertExpansion

__all__ = [
    "NilCoxElement", "nc_mul", "generator", "schubert_expression",
    "theorem1_check", "Theorem1Report", "edge_weight", "theorem2_constants",
]


class NilCoxElement:
    """A finite sum ``sum_w p_w e_w`` with polynomial coefficients ``p_w``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Permutation, Union[Polynomial, int]]] = None):
        clean = {}
        for w, p in (terms or {}).items():
            if isinstance(p, int):
                p = Polynomial.const(p)
            if p:
                clean[w] = p
        self.terms: dict[Permutation, Polynomial] = clean

    @classmethod
    def one(cls) -> "NilCoxElement":
        return cls({Permutation.identity(): 1})

    def __getitem__(self, w: Permutation) -> Polynomial:
        return self.terms.get(w, Polynomial())

    def __eq__(self, other) -> bool:
        if not isinstance(other, NilCoxElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "NilCoxElement") -> "NilCoxElement":
        out = dict(self.terms)
        for w, p in other.terms.items():
            out[w] = out.get(w, Polynomial()) + p
        return NilCoxElement(out)

    def __sub__(self, other: "NilCoxElement") -> "NilCoxElement":
        return self + other.map(lambda p: -p)

    def __mul__(self, other: "NilCoxElement") -> "NilCoxElement":
        return nc_mul(self, other)

    def map(self, fn) -> "NilCoxElement":
        """Apply ``fn`` to every coefficient (e.g. a divided difference)."""
        return NilCoxElement({w: fn(p) for w, p in self.terms.items()})

    def __repr__(self) -> str:
        if not self.terms:
            return "NilCoxElement(0)"
        body = " + ".join(f"({p})*e[{w}]" for w, p in sorted(self.terms.items()))
        return f"NilCoxElement({body})"


def nc_mul(p: NilCoxElement, q: NilCoxElement) -> NilCoxElement:
    out: dict[Permutation, Polynomial] = {}
    for u, a in p.terms.items():
        lu = u.length()
        for v, b in q.terms.items():
            uv = compose(u, v)
            if uv.length() != lu + v.length():
                continue
            out[uv] = out.get(uv, Polynomial()) + a * b
    return NilCoxElement(out)


def generator(i: int, coeff: Union[Polynomial, int] = 1) -> NilCoxElement:
    """``coeff * e_i``."""
    return NilCoxElement({Permutation.simple(i): coeff})


def _linear_factor(x: Polynomial, i: int) -> NilCoxElement:
    # 1 + x e_i
    return NilCoxElement({Permutation.identity(): 1, Permutation.simple(i): x})


def a_factor(i: int, x: Polynomial, n: int) -> NilCoxElement:
    """``(1 + x e_n)(1 + x e_{n-1}) ... (1 + x e_i)``."""
    out = NilCoxElement.one()
    for j in range(n, i - 1, -1):
        out = out * _linear_factor(x, j)
    return out


@lru_cache(maxsize=None)
def schubert_expression(n: int) -> NilCoxElement:
    """``A_1(x1) A_2(x2) ... A_n(xn)``; the coefficient of ``e_w`` is ``S_w``, ``w`` in ``S_{n+1}``."""
    out = NilCoxElement.one()
    for i in range(1, n + 1):
        out = out * a_factor(i, Polynomial.var(i), n)
    return out


@dataclass(frozen=True)
class Theorem1Report:
    i: int
    j: int
    n: int
    # w -> d_ij S_w, only for permutations whose image has a negative coefficient
    violations: Mapping[Permutation, Polynomial]
    checked: int

    @property
    def ok(self) -> bool:
        return not self.violations


def theorem1_check(i: int, j: int, n: int) -> Theorem1Report:
    """Apply ``d_ij`` to each coefficient of the Schubert expression for ``S_{n+1}``."""
    if not 1 <= i < j <= n + 1:
        raise ValueError(f"need 1 <= i < j <= {n + 1}, got ({i}, {j})")
    expr = schubert_expression(n)
    bad = {}
    for w in all_permutations(n + 1):
        image = ddiff_ij(i, j, expr[w])
        if not image.is_nonnegative():
            bad[w] = image
    return Theorem1Report(i, j, n, bad, len(all_permutations(n + 1)))


def edge_weight(upper: Permutation, lower: Permutation, s: int) -> Optional[tuple[int, bool]]:
    """Weight of the step ``upper -> lower`` seen by the variable ``x_s``.

    Returns ``None`` for zero, ``(0, True)`` for the scalar 1 (``upper == lower``),
    and ``(sign, False)`` when ``upper = lower * t_ab`` is a cover with ``s``
    in ``{a, b}``: ``+1`` if ``s = a < b``, ``-1`` if ``s = b > a``.
    """
    if upper == lower:
        return 0, True
    for v, a, b in lower_covers(upper):
        if v == lower:
            if s == a:
                return 1, False
            if s == b:
                return -1, False
            return None
    return None


def theorem2_constants(w: Permutation, u: Permutation, n: int) -> SchubertExpansion:
    """``v -> c^w_{uv}`` by summing weighted chains in Bruhat order.

    The chain runs through the factors ``1 + x_s e_{n-i}`` of the Schubert
    expression for ``S_n`` in order (``s = 1..n-1``, ``i = 1..n-s``). Each factor
    either keeps the current permutation (weight 1) or steps down a cover that
    moves position ``s`` (weight ``+-e_{n-i}``). The chain must end at ``u``.
    Totals are reported raw, signs included.
    """
    w, u = w.embed(n), u.embed(n)
    if not bruhat_leq(u, w):
        from .skewdiff import NotBruhatBelow
        raise NotBruhatBelow(u, w)
    factors = [(s, n - i) for s in range(1, n) for i in range(1, n - s + 1)]
    lu = u.length()
    # state: (current permutation, accumulated e_pi) -> integer coefficient
    states: dict[tuple[Permutation, Permutation], int] = {(w, Permutation.identity()): 1}
    for t, (s, k) in enumerate(factors):
        remaining = len(factors) - t - 1
        nxt: dict[tuple[Permutation, Permutation], int] = defaultdict(int)
        for (cur, pi), coeff in states.items():
            # stay put: weight 1
            if cur.length() - lu <= remaining:
                nxt[(cur, pi)] += coeff
            for low, a, b in lower_covers(cur):
                if s not in (a, b):
                    continue
                if low.length() - lu > remaining or not bruhat_leq(u, low):
                    continue
                pk = pi.right_mul_simple(k)
                if pk.length() != pi.length() + 1:
                    continue  # e_pi e_k = 0
                sign = 1 if s == a else -1
                nxt[(low, pk)] += sign * coeff
        states = {key: c for key, c in nxt.items() if c}
    out: dict[Permutation, int] = defaultdict(int)
    for (cur, pi), coeff in states.items():
        if cur == u:
            out[pi] += coeff
    return SchubertExpansion(n, dict(out))

"""
Schubert polynomials, Schubert-basis expansion modulo the ideal ``I_n`` of
positive-degree symmetric polynomials, and structure constants by multiplying.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from threading import Lock
from typing import Iterator, Mapping

from .divdiff import ddiff_i, ddiff_perm
from .perm import Permutation, all_permutations, compose
from .poly import Polynomial, eta, staircase

__all__ = [
    "SchubertExpansion", "schubert_poly", "schubert_by_definition",
    "schubert_expand", "reduce_mod_ideal", "pairing0", "constants_by_product",
]


@dataclass(frozen=True)
class SchubertExpansion:
    """A class in ``P_n / I_n`` written as ``sum c_w S_w``; zero coefficients dropped."""

    n: int
    coefficients: Mapping[Permutation, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {w: c for w, c in self.coefficients.items() if c}
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, w: Permutation) -> int:
        return self.coefficients.get(w, 0)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.coefficients))

    def items(self) -> list[tuple[Permutation, int]]:
        return [(w, self.coefficients[w]) for w in self]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchubertExpansion):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    def to_polynomial(self) -> Polynomial:
        out = Polynomial()
        for w, c in self.coefficients.items():
            out = out + schubert_poly(w).scale(c)
        return out

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for w, c in self.items():
            term = f"S[{w.embed(self.n)}]"
            if abs(c) != 1:
                term = f"{abs(c)}*{term}"
            sign = "-" if c < 0 else "+"
            parts.append(f"{sign} {term}" if parts else ("-" if c < 0 else "") + term)
        return " ".join(parts)


_memo: dict[Permutation, Polynomial] = {}
_memo_lock = Lock()


def schubert_poly(w: Permutation) -> Polynomial:
    """``S_w``, computed top-down from the staircase monomial.

    Memoized by permutation; stable under adding fixed points, so the result
    does not depend on the ambient rank.
    """
    hit = _memo.get(w)
    if hit is not None:
        return hit
    n = len(w.key)
    if w.length() == n * (n - 1) // 2:
        result = staircase(n)
    else:
        # an ascent i gives l(w s_i) = l(w) + 1 and S_w = d_i S_{w s_i}
        i = next(k for k in range(1, n) if w(k) < w(k + 1))
        result = ddiff_i(i, schubert_poly(w.right_mul_simple(i)))
    with _memo_lock:
        _memo.setdefault(w, result)
    return result


def schubert_by_definition(w: Permutation, n: int) -> Polynomial:
    """``S_w = d_{w^-1 w0}(x^delta)`` evaluated literally in ``S_n`` (no memo)."""
    w0 = Permutation.longest(n)
    return ddiff_perm(compose(w.embed(n).inverse(), w0), staircase(n))


@lru_cache(maxsize=None)
def _ordered_perms(n: int) -> tuple[tuple[Permutation, int, Permutation], ...]:
    """Each ``w`` of ``S_n`` (identity excluded) with ``a`` and ``s_a w`` one shorter."""
    out = []
    for w in all_permutations(n):
        if w.length():
            a = min(w.left_descents())
            out.append((w, a, w.left_mul_simple(a)))
    return tuple(out)


def _check_variables(f: Polynomial, n: int) -> None:
    if f.nvars() > n:
        raise ValueError(f"{f} involves x{f.nvars()}, outside P_{n}")


def schubert_expand(f: Polynomial, n: int) -> SchubertExpansion:
    """Coefficients ``c_w = eta(d_w f)`` with ``f = sum c_w S_w (mod I_n)``.

    Homogeneous parts of degree above ``n(n-1)/2`` lie in ``I_n`` and so
    contribute nothing.
    """
    _check_variables(f, n)
    top = min(f.degree(), n * (n - 1) // 2)
    images = {Permutation.identity(): f}
    coeffs = {Permutation.identity(): eta(f)}
    for w, a, shorter in _ordered_perms(n):
        if w.length() > top:
            break
        g = ddiff_i(a, images[shorter])
        images[w] = g
        coeffs[w] = eta(g)
    return SchubertExpansion(n, coeffs)


def reduce_mod_ideal(f: Polynomial, n: int) -> Polynomial:
    """Canonical representative of ``f`` modulo ``I_n``: ``sum c_w S_w``."""
    return schubert_expand(f, n).to_polynomial()


def pairing0(f: Polynomial, g: Polynomial, n: int) -> int:
    """``<f, g>_0 = eta(d_{w0}(f g))``."""
    return eta(ddiff_perm(Permutation.longest(n), f * g))


def constants_by_product(u: Permutation, v: Permutation, n: int) -> SchubertExpansion:
    """Structure constants ``c^w_{uv}`` from expanding ``S_u S_v`` mod ``I_n``."""
    return schubert_expand(schubert_poly(u) * schubert_poly(v), n)

"""
Divided difference operators.

``ddiff_ij(i, j, f) = (f - t_ij f) / (x_i - x_j)``. Words act with their
rightmost letter first, so ``ddiff_word((a1, a2), f) == ddiff_i(a1, ddiff_i(a2, f))``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .perm import Permutation, canonical_word
from .poly import Exponent, Polynomial

__all__ = [
    "ddiff_ij", "ddiff_i", "ddiff_word", "ddiff_perm",
    "isobaric_i", "isobaric_word", "isobaric_perm", "divide_by_difference",
]


def divide_by_difference(g: Polynomial, i: int, j: int) -> Polynomial:
    """Exact quotient ``g / (x_i - x_j)`` by long division in ``x_i``.

    Raises ``ArithmeticError`` if the division leaves a remainder.
    """
    width = max(i, j)
    levels: dict[int, dict[Exponent, int]] = defaultdict(lambda: defaultdict(int))
    for e, c in g.items():
        e = e + (0,) * (width - len(e))
        levels[e[i - 1]][e] += c
    quotient: dict[Exponent, int] = defaultdict(int)
    top = max(levels, default=0)
    for p in range(top, 0, -1):
        for e, c in levels.get(p, {}).items():
            if not c:
                continue
            # c*m = c*(m/x_i)*(x_i - x_j) + c*(m/x_i)*x_j
            q = list(e)
            q[i - 1] -= 1
            quotient[tuple(q)] += c
            q[j - 1] += 1
            levels[p - 1][tuple(q)] += c
    leftover = {e: c for e, c in levels.get(0, {}).items() if c}
    if leftover:
        raise ArithmeticError(
            f"{g} is not divisible by x{i} - x{j}; remainder {Polynomial(leftover)}")
    return Polynomial(quotient)


def ddiff_ij(i: int, j: int, f: Polynomial) -> Polynomial:
    if i == j:
        raise ValueError("ddiff_ij needs i != j")
    if not f:
        return f
    return divide_by_difference(f - f.swap(i, j), i, j)


def ddiff_i(i: int, f: Polynomial) -> Polynomial:
    return ddiff_ij(i, i + 1, f)


def ddiff_word(word: Sequence[int], f: Polynomial) -> Polynomial:
    for a in reversed(tuple(word)):
        if not f:
            break
        f = ddiff_i(a, f)
    return f


def ddiff_perm(w: Permutation, f: Polynomial) -> Polynomial:
    return ddiff_word(canonical_word(w), f)


def isobaric_i(i: int, f: Polynomial) -> Polynomial:
    """``pi_i(f) = d_i(x_i f)``."""
    return ddiff_i(i, f.times_var(i))


def isobaric_word(word: Sequence[int], f: Polynomial) -> Polynomial:
    for a in reversed(tuple(word)):
        f = isobaric_i(a, f)
    return f


def isobaric_perm(w: Permutation, f: Polynomial) -> Polynomial:
    return isobaric_word(canonical_word(w), f)

"""
Skew Schur polynomials three ways (Jacobi-Trudi, tableaux, Littlewood-Richardson)
and the bridge from Grassmannian Schubert structure constants to LR numbers.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence

from .perm import Permutation, code_and_shape, bruhat_leq
from .poly import Polynomial, complete, eta

__all__ = [
    "Partition", "partitions_in_box", "contains", "skew_cells",
    "semistandard_tableaux", "skew_schur_jt", "skew_schur_ssyt",
    "lr_coefficients", "schur_expand", "grassmannian_bridge", "NotGrassmannian",
]

Partition = tuple[int, ...]


def _clean(p: Sequence[int]) -> Partition:
    p = tuple(int(a) for a in p if a)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not a partition")
    return p


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    lam, mu = _clean(lam), _clean(mu)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` box, smallest first."""
    out = []

    def grow(prefix: list[int], cap: int) -> None:
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for part in range(1, cap + 1):
            grow(prefix + [part], part)

    grow([], cols)
    return sorted(out, key=lambda p: (sum(p), p))


def skew_cells(lam: Sequence[int], mu: Sequence[int]) -> list[tuple[int, int]]:
    lam, mu = _clean(lam), _clean(mu)
    mu = mu + (0,) * (len(lam) - len(mu))
    return [(r, c) for r in range(len(lam)) for c in range(mu[r], lam[r])]


def _det(matrix: list[list[Polynomial]]) -> Polynomial:
    # Laplace expansion along the first row with memo on the column set
    size = len(matrix)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Polynomial:
        if row == size:
            return Polynomial.const(1)
        total = Polynomial()
        for pos, c in enumerate(sorted(cols)):
            entry = matrix[row][c]
            if not entry:
                continue
            term = entry * minor(row + 1, cols - {c})
            total = total + (term if pos % 2 == 0 else -term)
        return total

    return minor(0, frozenset(range(size)))


def skew_schur_jt(lam: Sequence[int], mu: Sequence[int], n: int) -> Polynomial:
    """``det(h_{lam_i - mu_j - i + j})`` with ``h_k = h_k(x1..xn)``.

    The matrix is ``n x n``, or ``l(lam) x l(lam)`` when ``lam`` has more rows.
    """
    lam, mu = _clean(lam), _clean(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    size = max(n, len(lam))
    lam_p = lam + (0,) * (size - len(lam))
    mu_p = mu + (0,) * (size - len(mu))
    cache: dict[int, Polynomial] = {}

    def h(k: int) -> Polynomial:
        if k not in cache:
            cache[k] = complete(k, n)
        return cache[k]

    matrix = [[h(lam_p[i] - mu_p[j] - i + j) for j in range(size)] for i in range(size)]
    return _det(matrix)


def semistandard_tableaux(lam: Sequence[int], mu: Sequence[int],
                          max_entry: int) -> Iterator[dict[tuple[int, int], int]]:
    """Fillings of ``lam/mu`` with entries in ``1..max_entry``, rows weakly
    increasing and columns strictly increasing."""
    cells = skew_cells(lam, mu)
    filling: dict[tuple[int, int], int] = {}

    def place(k: int) -> Iterator[dict[tuple[int, int], int]]:
        if k == len(cells):
            yield dict(filling)
            return
        r, c = cells[k]
        low = 1
        if (r, c - 1) in filling:
            low = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            low = max(low, filling[(r - 1, c)] + 1)
        for val in range(low, max_entry + 1):
            filling[(r, c)] = val
            yield from place(k + 1)
        filling.pop((r, c), None)

    return place(0)


def skew_schur_ssyt(lam: Sequence[int], mu: Sequence[int], n: int) -> Polynomial:
    """Sum of ``x^weight(T)`` over semistandard tableaux of shape ``lam/mu``."""
    if not contains(lam, mu):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    terms: Counter = Counter()
    for t in semistandard_tableaux(lam, mu, n):
        weight = [0] * n
        for val in t.values():
            weight[val - 1] += 1
        terms[tuple(weight)] += 1
    return Polynomial(dict(terms))


def _is_lattice(word: Sequence[int]) -> bool:
    seen: Counter = Counter()
    for a in word:
        seen[a] += 1
        if a > 1 and seen[a] > seen[a - 1]:
            return False
    return True


def lr_coefficients(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    """``nu -> c^lam_{mu nu}``, counting LR tableaux of shape ``lam/mu``.

    The reading word runs right to left along each row, top row first.
    """
    lam, mu = _clean(lam), _clean(mu)
    if not contains(lam, mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    cells = skew_cells(lam, mu)
    order = sorted(cells, key=lambda rc: (rc[0], -rc[1]))
    out: Counter = Counter()
    for t in semistandard_tableaux(lam, mu, max(len(lam), 1)):
        word = [t[rc] for rc in order]
        if _is_lattice(word):
            counts = Counter(word)
            nu = tuple(counts[i] for i in range(1, max(counts, default=0) + 1))
            out[_clean(nu)] += 1
    return dict(out)


def schur_expand(f: Polynomial, n: int) -> dict[Partition, int]:
    """Write a symmetric polynomial in ``x1..xn`` as a combination of Schur polynomials.

    Repeatedly strips the lex-leading monomial ``x^lam`` (always a partition
    for symmetric input) with the matching multiple of ``s_lam``.
    """
    out: dict[Partition, int] = {}
    rest = f
    while rest:
        exp, c = max(rest.items(), key=lambda t: t[0] + (0,) * (n - len(t[0])))
        lam = _clean(exp)
        if exp != lam:
            raise ValueError("input is not symmetric")
        out[lam] = out.get(lam, 0) + c
        rest = rest - skew_schur_jt(lam, (), n).scale(c)
    return out


class NotGrassmannian(ValueError):
    pass


def grassmannian_bridge(u: Permutation, v: Permutation, w: Permutation) -> tuple[int, int]:
    """``(c^w_{uv}, c^lam_{mu nu})`` for Grassmannian ``u, v, w`` sharing a descent.

    The first entry comes from the skew divided difference route, the second
    from counting LR tableaux on the shapes of ``w``, ``u``, ``v``.
    """
    from .skewdiff import constants_by_skew

    shapes = []
    descents = set()
    for p in (u, v, w):
        _, info = code_and_shape(p)
        if info is None:
            raise NotGrassmannian(f"{p} has more than one descent")
        r, shape = info
        if r:
            descents.add(r)
        shapes.append(shape)
    if len(descents) > 1:
        raise NotGrassmannian(f"descents {sorted(descents)} differ")
    if w.length() != u.length() + v.length():
        raise ValueError("need l(w) = l(u) + l(v)")
    mu, nu, lam = shapes
    schubert_side = eta(constants_by_skew(u, v, w)) if bruhat_leq(v, w) else 0
    lr_side = lr_coefficients(lam, mu).get(nu, 0) if contains(lam, mu) else 0
    return schubert_side, lr_side

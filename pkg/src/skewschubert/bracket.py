"""
The bracket algebra on generators ``[ij]`` (``i < j``) with relations

    [ij]^2 = 0
    [ij][jk] = [jk][ik] + [ik][ij],   [jk][ij] = [ik][jk] + [ij][ik]   (i < j < k)
    [ij][kl] = [kl][ij]                when {i, j} and {k, l} are disjoint

together with the skew elements ``[w/v]``, their action as divided
differences (``[ij] -> d_ij``), and a bounded rewrite search for forms with
nonnegative coefficients.

No normal form is known, so equality of two elements is only ever checked
through their action on polynomials ("operator-level" equality).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import count
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

from .divdiff import ddiff_ij
from .perm import Permutation, bruhat_leq, canonical_word
from .poly import Polynomial, monomials_up_to
from .skewdiff import NotBruhatBelow, subword_walk

__all__ = [
    "Pair", "Monomial", "BracketMonomial", "BracketElement", "normalize_pair",
    "conjugate", "skew_element", "to_operator", "operator_equal",
    "rewrite_moves", "rewrite_search", "SearchResult",
]

Pair = tuple[int, int]
Monomial = tuple[Pair, ...]


def normalize_pair(i: int, j: int) -> tuple[Pair, int]:
    """``[ji] = -[ij]``; returns the ordered pair and the sign picked up."""
    if i == j:
        raise ValueError(f"[{i}{j}] is not a generator")
    return ((i, j), 1) if i < j else ((j, i), -1)


@dataclass(frozen=True)
class BracketMonomial:
    factors: Monomial
    sign: int = 1

    def __str__(self) -> str:
        body = "".join(_fmt_pair(p) for p in self.factors) or "1"
        return ("-" if self.sign < 0 else "") + body


def _fmt_pair(p: Pair) -> str:
    i, j = p
    if i < 10 and j < 10:
        return f"[{i}{j}]"
    return f"[{i},{j}]"


def conjugate(u: Permutation, m: BracketMonomial) -> BracketMonomial:
    """Push ``u`` through ``m``: each ``[ij]`` becomes ``[u(i) u(j)]``, sign-normalized."""
    sign = m.sign
    out = []
    for i, j in m.factors:
        p, s = normalize_pair(u(i), u(j))
        out.append(p)
        sign *= s
    return BracketMonomial(tuple(out), sign)


class BracketElement:
    """Integer combination of bracket monomials; syntactic, not reduced modulo relations."""

    __slots__ = ("terms", "_key")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}
        self._key = None

    @classmethod
    def from_monomials(cls, monomials: Iterable[BracketMonomial]) -> "BracketElement":
        out: dict[Monomial, int] = {}
        for m in monomials:
            out[m.factors] = out.get(m.factors, 0) + m.sign
        return cls(out)

    @classmethod
    def generator(cls, i: int, j: int) -> "BracketElement":
        p, s = normalize_pair(i, j)
        return cls({(p,): s})

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.key())

    def __add__(self, other: "BracketElement") -> "BracketElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return BracketElement(out)

    def __neg__(self) -> "BracketElement":
        return BracketElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "BracketElement") -> "BracketElement":
        return self + (-other)

    def __mul__(self, other: "BracketElement") -> "BracketElement":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
        return BracketElement(out)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def negative_mass(self) -> int:
        return sum(-c for c in self.terms.values() if c < 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms.items():
            body = "".join(_fmt_pair(p) for p in m) or "1"
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            if parts:
                parts.append(("- " if c < 0 else "+ ") + body)
            else:
                parts.append(("-" if c < 0 else "") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BracketElement({str(self)!r})"


def skew_element(w: Permutation, v: Permutation,
                 word: Optional[Sequence[int]] = None) -> BracketElement:
    """``[w/v]``: the subword sum with ``[a, a+1]`` in place of ``d_a``.

    Permutation factors are moved to the right through the brackets by
    conjugation; with the leading ``v^-1`` they cancel to the identity.
    """
    if not bruhat_leq(v, w):
        raise NotBruhatBelow(v, w)
    if word is None:
        word = canonical_word(w)
    word = tuple(word)
    masks = subword_walk(word, v, (), lambda a, m: (True,) + m, lambda a, m: (False,) + m)
    monomials = []
    vinv = v.inverse()
    for mask in masks:
        prefix = vinv
        factors = []
        sign = 1
        for a, taken in zip(word, mask):
            if taken:
                prefix = prefix.right_mul_simple(a)
            else:
                p, s = normalize_pair(prefix(a), prefix(a + 1))
                factors.append(p)
                sign *= s
        assert prefix == Permutation.identity()
        monomials.append(BracketMonomial(tuple(factors), sign))
    return BracketElement.from_monomials(monomials)


def to_operator(e: BracketElement) -> Callable[[Polynomial], Polynomial]:
    """The action ``[ij] -> d_ij``; monomials act right to left."""
    terms = list(e.terms.items())

    def op(f: Polynomial) -> Polynomial:
        total = Polynomial()
        for m, c in terms:
            g = f
            for i, j in reversed(m):
                if not g:
                    break
                g = ddiff_ij(i, j, g)
            total = total + g.scale(c)
        return total

    return op


def operator_equal(a: BracketElement, b: BracketElement, nvars: int,
                   degree: Optional[int] = None) -> bool:
    """Compare the actions of ``a`` and ``b`` on every monomial up to ``degree``."""
    if degree is None:
        degree = nvars * (nvars - 1) // 2
    diff = to_operator(a - b)
    return all(not diff(m) for m in monomials_up_to(nvars, degree))


# -- rewriting ---------------------------------------------------------------

def _relation_rhs(x: Pair, y: Pair) -> Optional[list[tuple[Pair, Pair, int]]]:
    """If ``x y`` is a term of a three-term relation, the equivalent combination."""
    idx = sorted(set(x) | set(y))
    if len(idx) != 3:
        return None
    i, j, k = idx
    ij, ik, jk = (i, j), (i, k), (j, k)
    relations = (
        {(ij, jk): 1, (jk, ik): -1, (ik, ij): -1},
        {(jk, ij): 1, (ik, jk): -1, (ij, ik): -1},
    )
    for rel in relations:
        if (x, y) in rel:
            r = rel[(x, y)]
            # r*(x y) + sum(o) = 0  =>  x y = -r * sum(others)
            return [(a, b, -r * c) for (a, b), c in rel.items() if (a, b) != (x, y)]
    return None


def rewrite_moves(e: BracketElement) -> Iterator[BracketElement]:
    """Every element reachable by one relation applied at one position of one monomial."""
    for m, c in e.terms.items():
        for p in range(len(m) - 1):
            x, y = m[p], m[p + 1]
            head, tail = m[:p], m[p + 2:]
            if x == y:
                replacement = []
            elif not set(x) & set(y):
                replacement = [(y, x, 1)]
            else:
                replacement = _relation_rhs(x, y)
                if replacement is None:
                    continue
            out = dict(e.terms)
            out[m] -= c
            for a, b, r in replacement:
                key = head + (a, b) + tail
                out[key] = out.get(key, 0) + c * r
            yield BracketElement(out)


@dataclass
class SearchResult:
    """Outcome of :func:`rewrite_search`.

    ``found`` is a nonnegative form equal to the input in the bracket algebra,
    or ``None`` when the budget ran out (which refutes nothing).
    """

    found: Optional[BracketElement]
    steps: int
    explored: int
    path: list[BracketElement] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return self.found is None


def rewrite_search(e: BracketElement, depth: int, max_nodes: int = 20000) -> SearchResult:
    """Best-first search over relation applications for a nonnegative form.

    Expressions with less negative weight are expanded first. No expression
    more than ``depth`` rewrites from ``e`` is considered, and at most
    ``max_nodes`` expressions are expanded.
    """
    if e.is_nonnegative():
        return SearchResult(e, 0, 0, [e])
    tie = count()
    start = e.key()
    parent: dict[tuple, Optional[tuple]] = {start: None}
    elems = {start: e}
    heap = [(e.negative_mass(), len(e), 0, next(tie), e)]
    explored = 0
    while heap and explored < max_nodes:
        _, _, d, _, cur = heapq.heappop(heap)
        explored += 1
        if d >= depth:
            continue
        for nxt in rewrite_moves(cur):
            k = nxt.key()
            if k in parent:
                continue
            parent[k] = cur.key()
            elems[k] = nxt
            if nxt.is_nonnegative():
                path = [nxt]
                back = parent[k]
                while back is not None:
                    path.append(elems[back])
                    back = parent[back]
                path.reverse()
                return SearchResult(nxt, d + 1, explored, path)
            heapq.heappush(heap, (nxt.negative_mass(), len(nxt), d + 1, next(tie), nxt))
    return SearchResult(None, depth, explored)

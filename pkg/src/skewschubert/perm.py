"""
Permutations of ``{1..n}`` in one-line notation.

Products follow ``(u * v)(i) == u(v(i))``, so a word ``(a1, ..., ap)`` stands
for ``s_a1 * ... * s_ap`` and its rightmost letter acts first on points.
Right multiplication by a transposition swaps *positions*, left multiplication
swaps *values*.

Equality and hashing ignore trailing fixed points, so ``Permutation((2, 1))``
and ``Permutation((2, 1, 3))`` are the same element of ``S_infinity``.

>>> from_word((2, 3), 4)
Permutation(1342)
>>> from_word((2, 1, 3, 2, 1), 4).length()
5
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _iter_permutations, product
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Permutation", "Word",
    "compose", "length_sign", "from_word", "reduced_words", "canonical_word",
    "is_reduced", "bruhat_leq", "bruhat_leq_subword", "cover_edge",
    "code_and_shape", "grassmannian_permutation", "all_permutations",
    "bruhat_interval", "lower_covers", "iter_words",
]

Word = tuple[int, ...]


class Permutation:
    """A bijection of ``{1..n}``, stored by its one-line window."""

    __slots__ = ("window", "_key", "_hash")

    def __init__(self, window: Iterable[int]):
        window = tuple(int(a) for a in window)
        if sorted(window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window!r} is not a permutation of 1..{len(window)}")
        self.window = window
        key = list(window)
        while key and key[-1] == len(key):
            key.pop()
        self._key = tuple(key)
        self._hash = hash(self._key)

    # -- construction -----------------------------------------------------

    @classmethod
    def identity(cls, n: int = 0) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def simple(cls, i: int, n: Optional[int] = None) -> "Permutation":
        n = max(n or 0, i + 1)
        return cls.transposition(i, i + 1, n)

    @classmethod
    def transposition(cls, i: int, j: int, n: Optional[int] = None) -> "Permutation":
        n = max(n or 0, i, j)
        window = list(range(1, n + 1))
        window[i - 1], window[j - 1] = window[j - 1], window[i - 1]
        return cls(window)

    # -- basic protocol ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.window)

    @property
    def key(self) -> tuple[int, ...]:
        """The window with trailing fixed points trimmed."""
        return self._key

    def __call__(self, i: int) -> int:
        return self.window[i - 1] if 1 <= i <= len(self.window) else i

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Permutation") -> bool:
        # only for deterministic sorting: by length, then lexicographically
        return (self.length(), self.padded(max(self.n, other.n))) < (
            other.length(), other.padded(max(self.n, other.n)))

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __str__(self) -> str:
        if not self.window:
            return "1"
        if len(self.window) < 10:
            return "".join(map(str, self.window))
        return ",".join(map(str, self.window))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def padded(self, n: int) -> tuple[int, ...]:
        """One-line window embedded in ``S_n`` (``n`` at least the trimmed size)."""
        if n < len(self._key):
            raise ValueError(f"{self} does not fit in S_{n}")
        return self._key + tuple(range(len(self._key) + 1, n + 1))

    def embed(self, n: int) -> "Permutation":
        return Permutation(self.padded(n))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.window)
        for i, a in enumerate(self.window, 1):
            inv[a - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        return _length(self._key)

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def code(self) -> tuple[int, ...]:
        w = self.window
        return tuple(sum(1 for j in range(i + 1, len(w)) if w[j] < w[i])
                     for i in range(len(w)))

    def descents(self) -> list[int]:
        """Right descents: positions ``i`` with ``w(i) > w(i+1)``."""
        w = self.window
        return [i for i in range(1, len(w)) if w[i - 1] > w[i]]

    def left_descents(self) -> list[int]:
        """Values ``i`` such that ``i+1`` appears before ``i``."""
        inv = self.inverse().window
        return [i for i in range(1, len(inv)) if inv[i - 1] > inv[i]]

    def right_mul_simple(self, i: int) -> "Permutation":
        """``self * s_i``: swap positions ``i`` and ``i+1``."""
        w = list(self.padded(max(len(self.window), i + 1)))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def left_mul_simple(self, i: int) -> "Permutation":
        """``s_i * self``: swap values ``i`` and ``i+1``."""
        w = self.padded(max(len(self.window), i + 1))
        swap = {i: i + 1, i + 1: i}
        return Permutation(swap.get(a, a) for a in w)

    def swap_positions(self, i: int, j: int) -> "Permutation":
        """``self * t_ij``."""
        w = list(self.padded(max(len(self.window), i, j)))
        w[i - 1], w[j - 1] = w[j - 1], w[i - 1]
        return Permutation(w)


@lru_cache(maxsize=None)
def _length(key: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(key)) for j in range(i + 1, len(key))
               if key[i] > key[j])


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u * v)(i) = u(v(i))``; the smaller rank is embedded first."""
    n = max(u.n, v.n)
    uw, vw = u.padded(n), v.padded(n)
    return Permutation(uw[b - 1] for b in vw)


def length_sign(w: Permutation) -> tuple[int, int]:
    return w.length(), w.sign()


def from_word(word: Sequence[int], n: Optional[int] = None) -> Permutation:
    """``s_a1 * s_a2 * ... * s_ap`` in ``S_n``."""
    word = tuple(word)
    need = max(word, default=0) + 1
    if n is None:
        n = need
    elif word and need > n:
        raise ValueError(f"letter {need - 1} out of range for S_{n}")
    w = list(range(1, n + 1))
    # right-multiplying by s_a swaps positions a, a+1
    for a in word:
        if a < 1:
            raise ValueError(f"bad letter {a}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return Permutation(w)


def is_reduced(word: Sequence[int]) -> bool:
    return from_word(word).length() == len(word)


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> frozenset[Word]:
    """All reduced words of ``w``, by stripping left descents recursively."""
    if w.length() == 0:
        return frozenset({()})
    out = set()
    for a in w.left_descents():
        for rest in reduced_words(w.left_mul_simple(a)):
            out.add((a,) + rest)
    return frozenset(out)


@lru_cache(maxsize=None)
def canonical_word(w: Permutation) -> Word:
    """The lexicographically smallest reduced word of ``w``."""
    word = []
    while w.length():
        a = min(w.left_descents())
        word.append(a)
        w = w.left_mul_simple(a)
    return tuple(word)


@lru_cache(maxsize=None)
def bruhat_leq(v: Permutation, w: Permutation) -> bool:
    """``v <= w`` in Bruhat order, by comparing rank matrices."""
    if v.length() > w.length():
        return False
    n = max(v.n, w.n)
    vw, ww = v.padded(n), w.padded(n)
    for i in range(1, n):
        a = sorted(vw[:i], reverse=True)
        b = sorted(ww[:i], reverse=True)
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def bruhat_leq_subword(v: Permutation, w: Permutation,
                       word: Optional[Sequence[int]] = None) -> bool:
    """``v <= w`` decided by the subword property on one reduced word of ``w``."""
    if word is None:
        word = canonical_word(w)
    target = v.length()
    seen = {Permutation.identity()}
    # grow left-prefixes of reduced words of v along the word of w
    for a in word:
        step = set()
        for p in seen:
            q = p.right_mul_simple(a)
            if q.length() == p.length() + 1 and q.length() <= target:
                step.add(q)
        seen |= step
    return v in seen


def cover_edge(v: Permutation, w: Permutation) -> Optional[tuple[int, int]]:
    """The pair ``(i, j)`` with ``w = v * t_ij`` and ``l(w) = l(v) + 1``, if any."""
    if w.length() != v.length() + 1:
        return None
    n = max(v.n, w.n)
    vw, ww = v.padded(n), w.padded(n)
    diff = [i + 1 for i in range(n) if vw[i] != ww[i]]
    if len(diff) != 2:
        return None
    i, j = diff
    if vw[i - 1] == ww[j - 1] and vw[j - 1] == ww[i - 1]:
        return i, j
    return None


def code_and_shape(w: Permutation) -> tuple[tuple[int, ...], Optional[tuple[int, tuple[int, ...]]]]:
    """Lehmer code, plus ``(r, partition)`` when ``w`` is Grassmannian.

    The identity has no descent and is reported at ``r = 0`` with empty shape.
    """
    code = w.code()
    des = w.descents()
    if len(des) > 1:
        return code, None
    r = des[0] if des else 0
    shape = tuple(sorted((c for c in code if c), reverse=True))
    return code, (r, shape)


def grassmannian_permutation(shape: Sequence[int], r: int, n: int) -> Permutation:
    """The Grassmannian permutation of ``S_n`` with descent at ``r`` and given shape."""
    shape = [p for p in shape if p]
    if len(shape) > r or (shape and shape[0] > n - r):
        raise ValueError(f"shape {tuple(shape)} does not fit in a {r}x{n - r} box")
    padded = list(shape) + [0] * (r - len(shape))
    first = [i + 1 + padded[r - 1 - i] for i in range(r)]
    rest = [a for a in range(1, n + 1) if a not in first]
    return Permutation(first + rest)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """``S_n`` sorted by length, then lexicographically."""
    perms = [Permutation(p) for p in _iter_permutations(range(1, n + 1))]
    return tuple(sorted(perms, key=lambda p: (p.length(), p.padded(n))))


def bruhat_interval(u: Permutation, w: Permutation, n: int) -> list[Permutation]:
    """All ``v`` in ``S_n`` with ``u <= v <= w``."""
    return [v for v in all_permutations(n) if bruhat_leq(u, v) and bruhat_leq(v, w)]


@lru_cache(maxsize=None)
def lower_covers(w: Permutation) -> tuple[tuple[Permutation, int, int], ...]:
    """Triples ``(v, i, j)`` with ``w = v * t_ij`` a Bruhat cover."""
    n = w.n
    lw = w.length()
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if w(i) > w(j):
                v = w.swap_positions(i, j)
                if v.length() == lw - 1:
                    out.append((v, i, j))
    return tuple(out)


def iter_words(n: int, length: int) -> Iterator[Word]:
    """Every word of the given length over ``1..n-1``."""
    return product(range(1, n), repeat=length)

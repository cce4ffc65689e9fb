"""
Sparse polynomials in ``Z[x1, x2, ...]`` with exact integer coefficients.

A polynomial is a map from exponent vectors (trailing zeros trimmed) to
nonzero ints. Values are immutable; every operation returns a new object.
Python ints never wrap, so there is no overflow path to guard.

>>> x1, x2 = Polynomial.var(1), Polynomial.var(2)
>>> print((x1 + x2) * (x1 - x2))
x1^2 - x2^2
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Union

from .perm import Permutation

__all__ = [
    "Polynomial", "Exponent", "permute_variables", "eta",
    "elementary", "complete", "staircase", "monomials_up_to",
]

Exponent = tuple[int, ...]


def _trim(exp: Iterable[int]) -> Exponent:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


def _add_exp(a: Exponent, b: Exponent) -> Exponent:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def _order_key(exp: Exponent, width: int) -> tuple:
    # graded lex with x1 > x2 > ...
    return (sum(exp), exp + (0,) * (width - len(exp)))


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[Exponent, int], None] = None):
        clean: dict[Exponent, int] = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    e = _trim(exp)
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "Polynomial":
        # caller guarantees trimmed exponents and nonzero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int) -> "Polynomial":
        if i < 1:
            raise ValueError("variables are x1, x2, ...")
        return cls._raw({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "Polynomial":
        return cls({tuple(exp): coeff})

    # -- container protocol ------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, int]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self._terms)

    def coefficient(self, exp: Iterable[int]) -> int:
        return self._terms.get(_trim(exp), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations --------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out: dict[Exponent, int] = defaultdict(int)
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                out[_add_exp(e1, e2)] += c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, k: int) -> "Polynomial":
        if not k:
            return Polynomial()
        return Polynomial._raw({e: k * c for e, c in self._terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- inspection -------------------------------------------------------

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def nvars(self) -> int:
        """Index of the largest variable that occurs."""
        return max((len(e) for e in self._terms), default=0)

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw({e: c for e, c in self._terms.items() if sum(e) == d})

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def is_constant(self) -> bool:
        return all(e == () for e in self._terms)

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in descending graded-lex order."""
        width = self.nvars()
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0], width),
                      reverse=True)

    # -- variable substitutions ---------------------------------------------

    def swap(self, i: int, j: int) -> "Polynomial":
        """Interchange ``x_i`` and ``x_j``."""
        width = max(i, j)
        out = {}
        for e, c in self._terms.items():
            if len(e) < width:
                e = e + (0,) * (width - len(e))
            a, b = e[i - 1], e[j - 1]
            if a == b:
                out[_trim(e)] = c
                continue
            e = list(e)
            e[i - 1], e[j - 1] = b, a
            out[_trim(e)] = c
        return Polynomial._raw(out)

    def times_var(self, i: int, k: int = 1) -> "Polynomial":
        """Multiply by ``x_i^k``."""
        out = {}
        for e, c in self._terms.items():
            e = list(e) + [0] * (i - len(e))
            e[i - 1] += k
            out[tuple(e)] = c
        return Polynomial._raw(out)

    def evaluate(self, values: Mapping[int, int] | Iterable[int]) -> int:
        """Integer evaluation; ``values`` maps variable index to value."""
        if not isinstance(values, Mapping):
            values = dict(enumerate(values, 1))
        total = 0
        for e, c in self._terms.items():
            t = c
            for i, a in enumerate(e, 1):
                if a:
                    t *= values[i] ** a
            total += t
        return total

    # -- display / serialization --------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(exp, 1) if a)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_records(self) -> list[dict]:
        return [{"exponents": list(e), "coefficient": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> "Polynomial":
        return cls({tuple(r["exponents"]): int(r["coefficient"]) for r in records})

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text)


def permute_variables(w: Permutation, f: Polynomial) -> Polynomial:
    """Substitute ``x_i -> x_w(i)`` in every monomial."""
    window = w.key
    if not window:
        return f
    n = len(window)
    out = {}
    for e, c in f.items():
        new = [0] * max(n, len(e))
        for i, a in enumerate(e):
            if a:
                new[window[i] - 1 if i < n else i] = a
        out[_trim(new)] = c
    return Polynomial._raw(out)


def eta(f: Polynomial) -> int:
    """Constant term, i.e. ``f`` evaluated at ``x = 0``."""
    return f.constant_term()


def elementary(k: int, n: int) -> Polynomial:
    """``e_k(x1..xn)``; zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return Polynomial()
    terms = {}
    for subset in combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return Polynomial(terms)


def complete(k: int, n: int) -> Polynomial:
    """``h_k(x1..xn)``; zero for ``k < 0``, ``h_0 = 1``."""
    if k < 0:
        return Polynomial()
    terms = {}
    for multiset in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in multiset:
            e[i] += 1
        terms[tuple(e)] = 1
    return Polynomial(terms)


def staircase(n: int) -> Polynomial:
    """``x1^(n-1) x2^(n-2) ... x_{n-1}``."""
    return Polynomial.monomial(range(n - 1, -1, -1))


def monomials_up_to(nvars: int, degree: int) -> list[Polynomial]:
    """Every monomial in ``x1..x_nvars`` of total degree at most ``degree``."""
    out = []
    for d in range(degree + 1):
        for multiset in combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for i in multiset:
                e[i] += 1
            out.append(Polynomial.monomial(e))
    return out

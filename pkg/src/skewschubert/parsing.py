"""
One-line text notation for permutations, words, partitions, compositions and
polynomials.

    4312            permutation in one-line notation (single digits)
    10,2,3,4,5,6,7,8,9,1
                    permutation as a comma list
    w:2,1,3,2,1     product s_2 s_1 s_3 s_2 s_1 of simple transpositions
    p:3,2,1         partition
    c:0,2,1         composition
    x1^3*x2^2 - 2*x4 + 7
                    polynomial; ``*`` is required between factors
"""

from __future__ import annotations

import re
from typing import Union

from .perm import Permutation, from_word
from .poly import Polynomial
from .skewkey import Composition

__all__ = [
    "ParseError", "parse_input", "parse_permutation", "parse_word",
    "parse_partition", "parse_composition", "parse_polynomial",
]

PERM_GRAMMAR = "digits like 4312, a comma list like 10,2,1,..., or w:<letters>"


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.text, self.pos, self.expected = text, pos, expected
        super().__init__(f"cannot parse {text!r} at position {pos}: expected {expected}")


def _int_list(text: str, offset: int, expected: str) -> tuple[int, ...]:
    body = text[offset:]
    if not body:
        raise ParseError(text, offset, expected)
    out = []
    pos = offset
    for chunk in body.split(","):
        s = chunk.strip()
        if not s.isdigit():
            raise ParseError(text, pos, expected)
        out.append(int(s))
        pos += len(chunk) + 1
    return tuple(out)


def parse_word(text: str) -> tuple[int, ...]:
    """``w:2,1,3`` (or a bare comma list) as a tuple of simple-transposition indices."""
    text = text.strip()
    offset = 2 if text.startswith("w:") else 0
    word = _int_list(text, offset, "comma-separated positive integers")
    for k, a in enumerate(word):
        if a < 1:
            raise ParseError(text, offset, f"letters >= 1 (letter {k + 1} is {a})")
    return word


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text.startswith("w:"):
        return from_word(parse_word(text))
    if "," in text:
        values = _int_list(text, 0, PERM_GRAMMAR)
    else:
        if not text:
            raise ParseError(text, 0, PERM_GRAMMAR)
        for k, ch in enumerate(text):
            if not ch.isdigit():
                raise ParseError(text, k, PERM_GRAMMAR)
        values = tuple(int(ch) for ch in text)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ParseError(text, 0, f"a rearrangement of 1..{len(values)}")
    return Permutation(values)


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    offset = 2 if text.startswith("p:") else 0
    if text[offset:] in ("", "0"):
        return ()
    parts = _int_list(text, offset, "weakly decreasing nonnegative integers like p:3,2,1")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ParseError(text, offset, "weakly decreasing parts")
    return tuple(p for p in parts if p)


def parse_composition(text: str) -> Composition:
    text = text.strip()
    offset = 2 if text.startswith("c:") else 0
    return Composition(_int_list(text, offset, "nonnegative integers like c:0,2,1"))


def parse_input(text: str) -> Union[Permutation, tuple[int, ...], Composition]:
    """Dispatch on the prefix: ``p:`` partition, ``c:`` composition, otherwise a permutation."""
    text = text.strip()
    if text.startswith("p:"):
        return parse_partition(text)
    if text.startswith("c:"):
        return parse_composition(text)
    return parse_permutation(text)


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\*)|([+-]))")


def parse_polynomial(text: str) -> Polynomial:
    """Parse sums of terms ``[int *] x<i>[^k] (* x<j>[^k])*`` with integer coefficients."""
    tokens = []
    pos = 0
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(text, pos, "an integer, x<i>, '^', '*', '+' or '-'")
        kind = m.lastindex
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append((0, "", len(text)))
    k = 0

    def peek():
        return tokens[k]

    def take(kind: int, expected: str):
        nonlocal k
        tok = tokens[k]
        if tok[0] != kind:
            raise ParseError(text, tok[2], expected)
        k += 1
        return tok

    def factor() -> Polynomial:
        if peek()[0] == 1:
            return Polynomial.const(int(take(1, "an integer")[1]))
        take(2, "an integer or a variable x<i>")
        idx = int(take(1, "a variable index after 'x'")[1])
        if idx < 1:
            raise ParseError(text, tokens[k - 1][2], "a variable index >= 1")
        power = 1
        if peek()[0] == 3:
            take(3, "'^'")
            power = int(take(1, "an integer exponent")[1])
        return Polynomial.var(idx) ** power

    def term() -> Polynomial:
        out = factor()
        while peek()[0] == 4:
            take(4, "'*'")
            out = out * factor()
        if peek()[0] not in (0, 5):
            raise ParseError(text, peek()[2], "'*', '+', '-' or end of input")
        return out

    total = Polynomial()
    sign = 1
    if peek()[0] == 5:
        sign = -1 if take(5, "a sign")[1] == "-" else 1
    total = total + term().scale(sign)
    while peek()[0] == 5:
        sign = -1 if take(5, "'+' or '-'")[1] == "-" else 1
        total = total + term().scale(sign)
    take(0, "'+', '-' or end of input")
    return total

import pytest

from skewschubert.parsing import (ParseError, parse_composition, parse_input,
                                  parse_partition, parse_permutation, parse_polynomial,
                                  parse_word)
from skewschubert.perm import Permutation
from skewschubert.poly import Polynomial
from skewschubert.skewkey import Composition


def test_input_examples():
    assert parse_input("w:2,1,3,2,1") == Permutation((4, 3, 1, 2))
    assert parse_input("1234") == Permutation.identity()
    assert parse_input("p:2,1") == (2, 1)
    assert parse_input("c:0,2,1") == Composition((0, 2, 1))


def test_comma_permutation():
    w = parse_permutation("10,2,3,4,5,6,7,8,9,1")
    assert w(1) == 10 and w(10) == 1
    assert str(w) == "10,2,3,4,5,6,7,8,9,1"


def test_word():
    assert parse_word("w:2,1,3") == (2, 1, 3)
    assert parse_word("1, 2") == (1, 2)


def test_partition_and_composition():
    assert parse_partition("p:3,2,1,0") == (3, 2, 1)
    assert parse_partition("p:0") == ()
    assert parse_composition("0,1,2").parts == (0, 1, 2)


@pytest.mark.parametrize("text,pos", [("43a2", 2), ("4,3,,1", 4), ("1224", 0), ("w:2,x", 4)])
def test_permutation_errors(text, pos):
    with pytest.raises(ParseError) as err:
        parse_permutation(text)
    assert err.value.pos == pos
    assert "expected" in str(err.value)


def test_partition_must_decrease():
    with pytest.raises(ParseError):
        parse_partition("p:1,2")


def test_polynomials():
    assert parse_polynomial("x1^3*x2^2") == Polynomial.monomial((3, 2))
    assert parse_polynomial("-x1 + 2*x2 - 3") == Polynomial({(1,): -1, (0, 1): 2, (): -3})
    assert parse_polynomial(" x1 * x1 ") == Polynomial.monomial((2,))
    assert parse_polynomial("0") == Polynomial()
    assert parse_polynomial("2*3*x1") == Polynomial.monomial((1,), 6)


@pytest.mark.parametrize("text,pos", [
    ("x1 x2", 3),      # implicit multiplication
    ("2x1", 1),
    ("x1^", 3),
    ("x", 1),
    ("x0", 1),
    ("x1 + ", 5),
    ("y1", 0),
    ("x1 ** 2", 4),
])
def test_polynomial_errors(text, pos):
    with pytest.raises(ParseError) as err:
        parse_polynomial(text)
    assert err.value.pos == pos

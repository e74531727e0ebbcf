import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sturmian_apr import FieldElement, IncompatibleFieldError, ParseError, parse_field
from sturmian_apr.field import squarefree_split

from conftest import INV_TAU, SQRT5


def test_normalisation():
    x = FieldElement(2, 4, 6, 5)
    assert (x.a, x.b, x.c, x.d) == (1, 2, 3, 5)
    assert FieldElement(3, 1, 1, 8) == FieldElement(3, 2, 1, 2)  # sqrt(8) = 2 sqrt(2)
    assert FieldElement(1, 3, 1, 9) == 10
    assert FieldElement(1, 2, -3, 5) == FieldElement(-1, -2, 3, 5)
    assert FieldElement(5, 0, 10, 7).d == 0


@pytest.mark.parametrize("n,expected", [(1, (1, 1)), (8, (2, 2)), (45, (3, 5)), (72, (6, 2)), (97, (1, 97))])
def test_squarefree_split(n, expected):
    assert squarefree_split(n) == expected


def test_golden_identities():
    one = FieldElement(1)
    assert one - INV_TAU == parse_field("(3-sqrt(5))/2")
    assert INV_TAU * INV_TAU == (3 - SQRT5) / 2
    assert INV_TAU > FieldElement.rational(1, 2)
    assert 1 / INV_TAU == INV_TAU + 1


def test_mixed_radicands_rejected():
    with pytest.raises(IncompatibleFieldError):
        FieldElement.sqrt(2) + FieldElement.sqrt(3)
    with pytest.raises(IncompatibleFieldError):
        FieldElement.sqrt(2) < FieldElement.sqrt(3)
    # rationals mix with anything
    assert FieldElement.sqrt(2) + Fraction(1, 2) == parse_field("1/2+sqrt(2)")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        INV_TAU / 0
    with pytest.raises(ZeroDivisionError):
        FieldElement(0).inverse()


def test_floor_ceil_frac():
    x = parse_field("(7+3*sqrt(5))/2")  # 6.854...
    assert math.floor(x) == 6 and math.ceil(x) == 7
    assert math.floor(-x) == -7
    assert x.frac() == x - 6
    assert math.floor(FieldElement.rational(-7, 2)) == -4


def test_approx_truncates():
    assert INV_TAU.approx(12) == "0.618033988749"
    assert (-INV_TAU).approx(3) == "-0.619"


def test_rational_hash_matches_fraction():
    assert hash(FieldElement.rational(3, 4)) == hash(Fraction(3, 4))
    assert {FieldElement.rational(1, 2): 1}[FieldElement(2, 0, 4)] == 1


@pytest.mark.parametrize("text", ["(-1+sqrt(5))/2", "(3-sqrt(5))/2", "-1+sqrt(2)", "sqrt(2)/2",
                                  "7/12", "-3", "2*sqrt(3)", "(1-5*sqrt(13))/6"])
def test_print_parse_round_trip(text):
    x = parse_field(text)
    assert str(x) == text
    assert parse_field(str(x)) == x


def test_parser_grammar():
    assert parse_field("1/(1+ (sqrt(5)-1)/2)") == INV_TAU
    assert parse_field("-(2 - sqrt(2))") == parse_field("-2+sqrt(2)")
    assert parse_field("sqrt(8)") == 2 * FieldElement.sqrt(2)
    for bad in ["", "1+", "sqrt(x)", "1/0", "(1", "1 2", "0.5"]:
        with pytest.raises(ParseError):
            parse_field(bad)


small = st.integers(-50, 50)
elements = st.builds(lambda a, b, c: FieldElement(a, b, c, 5), small, small, st.integers(1, 30))


@given(elements, elements)
def test_compare_agrees_with_float_witness(x, y):
    gap = float(x) - float(y)
    if abs(gap) > 1e-9:
        assert (x < y) == (gap < 0)
        assert (x > y) == (gap > 0)
    assert (x < y) + (x == y) + (x > y) == 1


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if y:
        assert (x / y) * y == x


@given(elements)
def test_floor_brackets_value(x):
    f = math.floor(x)
    assert f <= x < f + 1

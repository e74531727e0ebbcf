import pytest
from hypothesis import given, strategies as st

from sturmian_apr import BinaryWord, exchange_morphism
from sturmian_apr.words import canonical_order

bits = st.text(alphabet="01", max_size=40)


def test_exchange_examples():
    assert exchange_morphism("001") == "110"
    assert exchange_morphism("") == ""


@given(bits)
def test_exchange_is_involution(w):
    assert exchange_morphism(exchange_morphism(w)) == w


@given(bits)
def test_ab_vector(w):
    bw = BinaryWord(w)
    assert bw.ab_vector == (w.count("0"), w.count("1"))
    assert sum(bw.ab_vector) == len(w)


def test_bytes_input_and_slicing():
    w = BinaryWord(b"\x00\x01\x01")
    assert w == "011"
    assert isinstance(w[1:], BinaryWord) and isinstance(w + "0", BinaryWord)
    assert w.mirrored() == "110"


def test_rejects_other_symbols():
    with pytest.raises(ValueError):
        BinaryWord("012")


def test_lex_order_zero_below_one():
    assert BinaryWord("001") < BinaryWord("01") < BinaryWord("1")


def test_canonical_order_by_length_then_lex():
    assert canonical_order(["10", "0", "001", "1", "01", "0"]) == ("0", "1", "01", "10", "001")

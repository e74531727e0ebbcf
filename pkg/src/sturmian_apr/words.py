"""Finite binary words."""

from __future__ import annotations

from functools import cached_property

__all__ = ["BinaryWord", "exchange_morphism", "canonical_order", "sort_key"]

_FLIP = str.maketrans("01", "10")
_FROM_BYTES = bytes.maketrans(b"\x00\x01", b"01")


class BinaryWord(str):
    """A word over ``{0, 1}``; ordinary ``str`` ordering is lexicographic with 0 < 1.

    A proper prefix sorts before its extensions, as usual.
    """

    def __new__(cls, symbols=""):
        if isinstance(symbols, (bytes, bytearray, memoryview)):
            symbols = bytes(symbols).translate(_FROM_BYTES).decode("ascii")
        word = super().__new__(cls, symbols)
        if word.strip("01"):
            raise ValueError(f"not a binary word: {symbols!r}")
        return word

    @cached_property
    def ab_vector(self) -> tuple[int, int]:
        """``(|w|_0, |w|_1)``."""
        ones = self.count("1")
        return len(self) - ones, ones

    def __add__(self, other):
        return BinaryWord(str.__add__(self, other))

    def __getitem__(self, item):
        return BinaryWord(str.__getitem__(self, item))

    def exchanged(self) -> BinaryWord:
        return BinaryWord(self.translate(_FLIP))

    def mirrored(self) -> BinaryWord:
        return BinaryWord(self[::-1])

    def __repr__(self):
        return f"BinaryWord({str.__repr__(self)})"


def exchange_morphism(w: str) -> BinaryWord:
    """The letter exchange ``0 <-> 1``."""
    return BinaryWord(w).exchanged()


def sort_key(w: str):
    return len(w), w


def canonical_order(words) -> tuple[BinaryWord, ...]:
    """Words sorted by length, then lexicographically."""
    return tuple(sorted((BinaryWord(w) for w in set(words)), key=sort_key))

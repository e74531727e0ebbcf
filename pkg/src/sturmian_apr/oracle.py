"""Brute-force abelian returns read directly off a long prefix of the word.

Nothing here uses itineraries, delta values or the renormalisation loop; the
only shared layer is the exact orbit coding that produces the word.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .contfrac import as_slope
from .errors import InfiniteResult, InsufficientData
from .field import FieldElement
from .iet import code_orbit
from .words import BinaryWord, canonical_order

__all__ = ["OracleReport", "abelian_returns_of_factor", "apr_bruteforce"]

_TO_BITS = bytes.maketrans(b"01", b"\x00\x01")
_FLIP_BITS = bytes.maketrans(b"\x00\x01", b"\x01\x00")


def _bits(word) -> bytes:
    if isinstance(word, (bytes, bytearray)):
        return bytes(word)
    return str(word).encode("ascii").translate(_TO_BITS)


def _scan(bits: bytes, n: int, min_occurrences: int):
    reps, occ, lo, hi = kernels.scan_prefix(bits, n)
    if occ < max(min_occurrences, 2):
        raise InsufficientData(
            f"only {occ} occurrences of the length-{n} prefix class in {len(bits)} symbols")
    words = frozenset(BinaryWord(bits[s:s + g]) for s, g in reps)
    return words, occ, lo, hi


def abelian_returns_of_factor(word, w_len: int, min_occurrences: int = 2) -> frozenset[BinaryWord]:
    """Abelian returns to the length-``w_len`` prefix of ``word``.

    Consecutive starting positions of windows abelian equivalent to the
    prefix cut ``word`` into return words; only complete returns count.
    """
    return _scan(_bits(word), w_len, min_occurrences)[0]


@dataclass
class OracleReport:
    per_prefix: dict[int, frozenset[BinaryWord]]
    accumulated: tuple[BinaryWord, ...]
    stabilized_at: int | None
    generated_length: int
    heavy: frozenset[int] = frozenset()
    occurrences: dict[int, int] = field(default_factory=dict)
    exchange_mismatches: tuple[int, ...] = ()

    @property
    def authoritative(self) -> bool:
        return self.stabilized_at is not None and not self.exchange_mismatches

    def light_returns(self) -> set[BinaryWord]:
        return {w for n, ws in self.per_prefix.items() if n not in self.heavy for w in ws}

    def heavy_returns(self) -> set[BinaryWord]:
        return {w for n, ws in self.per_prefix.items() if n in self.heavy for w in ws}


def apr_bruteforce(alpha, rho, max_prefix: int = 60, word_len: int = 10 ** 5,
                   min_occurrences: int = 50, max_word_len: int = 10 ** 7,
                   cross_check_heavy: bool = False) -> OracleReport:
    """Union of abelian returns to the prefixes of length ``1 .. max_prefix``.

    The word is regenerated at double length whenever some prefix class
    occurs fewer than ``min_occurrences`` times, up to ``max_word_len``.
    The accumulated set counts as stabilised once it has not grown for twice
    its longest element's length worth of further prefixes; ``stabilized_at``
    is the prefix length at which that window closed (``None`` if it never
    did).  A prefix is tagged heavy when it carries the smaller of the two
    possible numbers of 0s, judged from the scanned windows alone.
    """
    cf = as_slope(alpha)
    rho = FieldElement.coerce(rho)
    if rho == 0:
        raise InfiniteResult()
    slope = cf.value()
    m = word_len
    while True:
        bits = _bits(code_orbit(slope, rho, m))
        try:
            scans = {n: _scan(bits, n, min_occurrences) for n in range(1, max_prefix + 1)}
            break
        except InsufficientData:
            if m >= max_word_len:
                raise
            m = min(2 * m, max_word_len)

    per_prefix = {}
    occurrences = {}
    heavy = set()
    accumulated = set()
    last_growth = 0
    stabilized_at = None
    mismatches = []
    flipped = bits.translate(_FLIP_BITS) if cross_check_heavy else None
    for n in range(1, max_prefix + 1):
        words, occ, lo, hi = scans[n]
        per_prefix[n] = words
        occurrences[n] = occ
        ones = bits[:n].count(1)
        # fewer 0s means more 1s: the prefix sits at the top of the window range
        if lo != hi and ones == hi:
            heavy.add(n)
            if flipped is not None:
                mirrored = frozenset(w.exchanged() for w in _scan(flipped, n, 2)[0])
                if mirrored != words:
                    mismatches.append(n)
        if not words <= accumulated:
            accumulated |= words
            last_growth = n
            stabilized_at = None
        window = 2 * max(len(w) for w in accumulated)
        if stabilized_at is None and n - last_growth >= window:
            stabilized_at = n
    return OracleReport(per_prefix, canonical_order(accumulated), stabilized_at, m,
                        frozenset(heavy), occurrences, tuple(mismatches))

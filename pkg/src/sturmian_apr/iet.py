"""Two-interval exchanges, orbit coding and first-return induction.

All intervals are closed on the left and open on the right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import IterationCapExceeded, RationalSlopeError
from .field import FieldElement
from .words import BinaryWord

__all__ = [
    "IntervalExchange",
    "Piece",
    "InductionResult",
    "make_two_iet",
    "inverse_iterate_alpha",
    "code_orbit",
    "induce",
    "itineraries_zero_beta",
    "DEFAULT_MAX_STEPS",
]

DEFAULT_MAX_STEPS = 10 ** 6

_TAGS = {(1, 0): "swap2", (2, 1, 0): "perm321"}


@dataclass(frozen=True)
class IntervalExchange:
    """``x -> x + translations[j]`` on the j-th interval of ``[0, 1)``.

    ``breakpoints`` are the interior cut points (one for a two-interval
    exchange, two for a three-interval one).  ``permutation`` names the order
    in which the images are laid out and is checked against the data.
    """

    breakpoints: tuple[FieldElement, ...]
    translations: tuple[FieldElement, ...]
    permutation: str

    def __post_init__(self):
        bps = tuple(FieldElement.coerce(b) for b in self.breakpoints)
        trs = tuple(FieldElement.coerce(t) for t in self.translations)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "translations", trs)
        if len(trs) != len(bps) + 1:
            raise ValueError("need one translation per interval")
        ends = (FieldElement(0),) + bps + (FieldElement(1),)
        if any(not lo < hi for lo, hi in zip(ends, ends[1:])):
            raise ValueError("breakpoints must increase strictly inside (0, 1)")
        images = sorted(range(len(trs)), key=lambda j: ends[j] + trs[j])
        pos = FieldElement(0)
        for j in images:
            if ends[j] + trs[j] != pos:
                raise ValueError("images of the intervals do not tile [0, 1)")
            pos = ends[j + 1] + trs[j]
        if pos != 1:
            raise ValueError("images of the intervals do not tile [0, 1)")
        order = tuple(images.index(j) for j in range(len(trs)))
        if _TAGS.get(order) != self.permutation:
            raise ValueError(f"permutation {self.permutation!r} does not match data {order}")

    @property
    def ends(self) -> tuple[FieldElement, ...]:
        return (FieldElement(0),) + self.breakpoints + (FieldElement(1),)

    def letter(self, x: FieldElement) -> int:
        """Index of the interval containing ``x``."""
        if not 0 <= x < 1:
            raise ValueError(f"{x} outside [0, 1)")
        j = 0
        for b in self.breakpoints:
            if x >= b:
                j += 1
        return j

    def apply(self, x) -> FieldElement:
        x = FieldElement.coerce(x)
        return x + self.translations[self.letter(x)]

    def apply_inverse(self, x) -> FieldElement:
        x = FieldElement.coerce(x)
        if not 0 <= x < 1:
            raise ValueError(f"{x} outside [0, 1)")
        ends = self.ends
        for j, t in enumerate(self.translations):
            if ends[j] + t <= x < ends[j + 1] + t:
                return x - t
        raise AssertionError("unreachable: images tile [0, 1)")

    def __call__(self, x) -> FieldElement:
        return self.apply(x)


def make_two_iet(alpha) -> IntervalExchange:
    """The exchange of ``[0, alpha)`` and ``[alpha, 1)``."""
    alpha = FieldElement.coerce(alpha)
    if alpha.is_rational:
        raise RationalSlopeError(f"slope {alpha} is rational")
    if not 0 < alpha < 1:
        raise ValueError("slope must lie in (0, 1)")
    return IntervalExchange((alpha,), (1 - alpha, -alpha), "swap2")


def inverse_iterate_alpha(T: IntervalExchange, n: int) -> FieldElement:
    """``T^(-n+1)(alpha)``: the boundary between light and heavy prefixes of length ``n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    x = T.breakpoints[0]
    for _ in range(n - 1):
        x = T.apply_inverse(x)
    return x


def code_orbit(alpha, rho, n: int) -> BinaryWord:
    """Prefix of length ``n`` of the Sturmian word with slope ``alpha`` and intercept ``rho``."""
    alpha = FieldElement.coerce(alpha)
    rho = FieldElement.coerce(rho)
    if alpha.is_rational:
        raise RationalSlopeError(f"slope {alpha} is rational")
    if not 0 < alpha < 1 or not 0 <= rho < 1:
        raise ValueError("need 0 < alpha < 1 and 0 <= rho < 1")
    alpha._common_d(rho)
    # common denominator turns every orbit point into an integer pair
    L = alpha.c * rho.c // math.gcd(alpha.c, rho.c)
    sa, sr = L // alpha.c, L // rho.c
    bits = kernels.orbit_bits(rho.a * sr, rho.b * sr, alpha.a * sa, alpha.b * sa,
                              L, alpha.d, n)
    return BinaryWord(bits)


@dataclass(frozen=True)
class Piece:
    left: FieldElement
    right: FieldElement
    return_time: int
    itinerary: BinaryWord
    translation: FieldElement  # T_I(x) - x on the piece

    @property
    def length(self) -> FieldElement:
        return self.right - self.left

    def __str__(self):
        return f"[{self.left}, {self.right})  r={self.return_time}  R={self.itinerary}"


@dataclass(frozen=True)
class InductionResult:
    """First return of ``T`` to ``[left, right)``.

    ``pieces`` partition the interval in increasing order; ``induced`` is the
    first-return map rescaled affinely to ``[0, 1)``.
    """

    left: FieldElement
    right: FieldElement
    pieces: tuple[Piece, ...]
    translations: tuple[FieldElement, ...]
    induced: IntervalExchange
    steps: int

    @property
    def itineraries(self) -> frozenset[BinaryWord]:
        return frozenset(p.itinerary for p in self.pieces)

    def kac_sum(self) -> FieldElement:
        """Sum of length times return time over the pieces; equals 1 exactly."""
        total = FieldElement(0)
        for p in self.pieces:
            total = total + p.length * p.return_time
        return total


def induce(T: IntervalExchange, left, right, max_steps: int = DEFAULT_MAX_STEPS) -> InductionResult:
    """First-return map of ``T`` to ``I = [left, right)``.

    Subintervals of ``I`` are pushed forward exactly.  A pushed interval is
    cut where it straddles a discontinuity of ``T`` or an endpoint of ``I``;
    the parts landing inside ``I`` are finished, the rest keep moving.
    ``max_steps`` bounds the total number of single-interval moves.
    """
    left = FieldElement.coerce(left)
    right = FieldElement.coerce(right)
    if not 0 <= left < right <= 1:
        raise ValueError("need 0 <= left < right <= 1")
    ends = T.ends
    interior = T.breakpoints
    trs = T.translations
    binary = len(trs) == 2

    # (lo, hi, shift, word): the original piece [lo, hi) sits at [lo+shift, hi+shift) now
    active = [(left, right, FieldElement(0), "")]
    done = []
    steps = 0
    while active:
        lo, hi, shift, word = active.pop()
        steps += 1
        if steps > max_steps:
            raise IterationCapExceeded(
                f"inducing on [{left}, {right}) needed more than {max_steps} steps; "
                f"{len(done)} pieces finished, {len(active) + 1} still moving")
        a, b = lo + shift, hi + shift
        cuts = [a] + [c for c in interior if a < c < b] + [b]
        for x, y in zip(cuts, cuts[1:]):
            j = 0
            while j + 1 < len(ends) and x >= ends[j + 1]:
                j += 1
            nshift = shift + trs[j]
            nword = word + str(j)
            xa, ya = x + trs[j], y + trs[j]
            marks = [xa] + [c for c in (left, right) if xa < c < ya] + [ya]
            for u, v in zip(marks, marks[1:]):
                plo, phi = u - nshift, v - nshift
                if left <= u and v <= right:
                    done.append((plo, phi, nshift, nword))
                else:
                    active.append((plo, phi, nshift, nword))

    done.sort(key=lambda t: t[0])
    pieces = [Piece(lo, hi, len(word), BinaryWord(word) if binary else word, shift)
              for lo, hi, shift, word in done]

    # merge neighbours that the first-return map translates alike
    blocks = []
    for p in pieces:
        if blocks and blocks[-1][2] == p.translation:
            blocks[-1][1] = p.right
        else:
            blocks.append([p.left, p.right, p.translation])
    width = right - left
    cuts = tuple((blk[0] - left) / width for blk in blocks[1:])
    scaled = tuple(blk[2] / width for blk in blocks)
    images = sorted(range(len(blocks)), key=lambda j: blocks[j][0] + blocks[j][2])
    order = tuple(images.index(j) for j in range(len(blocks)))
    tag = _TAGS.get(order)
    if tag is None:
        raise ValueError(f"induced map has unexpected interval order {order}")
    induced = IntervalExchange(cuts, scaled, tag)
    return InductionResult(left, right, tuple(pieces), tuple(blk[2] for blk in blocks),
                           induced, steps)


def itineraries_zero_beta(alpha, beta, max_steps: int = DEFAULT_MAX_STEPS) -> frozenset[BinaryWord]:
    """The set of ``[0, beta)``-itineraries; two or three words.

    With three words they are ``R``, ``R'`` and ``RR'`` for the
    lexicographically ordered pair ``R < R'``; this is asserted.
    """
    T = make_two_iet(alpha)
    beta = FieldElement.coerce(beta)
    if not 0 < beta <= 1:
        raise ValueError("need 0 < beta <= 1")
    words = induce(T, 0, beta, max_steps).itineraries
    if len(words) == 3:
        longest = max(words, key=len)
        r, r2 = sorted(words - {longest})
        if r + r2 != longest:
            raise AssertionError(f"[0, {beta})-itineraries {sorted(words)} break the R, R', RR' shape")
    elif len(words) != 2:
        raise AssertionError(f"[0, {beta})-itineraries {sorted(words)}: expected 2 or 3 words")
    return words

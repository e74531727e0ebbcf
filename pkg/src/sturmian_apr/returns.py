"""Abelian returns to prefixes of a Sturmian word ``u`` with slope alpha, intercept rho.

The set splits as ``APR(u) = R(alpha, rho) | R'(alpha, rho)``: returns to the
light prefixes and returns to the heavy ones.  ``R`` is produced by
renormalising the slope one continued-fraction step at a time, ``R'`` by the
letter-exchange symmetry ``R'(alpha, rho) = E(R(1-alpha, 1-rho))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .contfrac import ContinuedFraction, as_slope
from .delta import MinimalIndices, minimal_indices
from .errors import InfiniteResult
from .field import FieldElement, parse_field
from .iet import inverse_iterate_alpha, make_two_iet
from .words import BinaryWord, canonical_order

__all__ = [
    "AlgorithmState",
    "Cardinality",
    "ReturnSetResult",
    "algorithm_states",
    "apr_cardinality",
    "apr_set",
    "as_slope",
    "characteristic_apr",
    "light_or_heavy",
    "r_prime_set",
    "r_set",
    "r_set_size",
]

ZERO_ONE = (BinaryWord("0"), BinaryWord("1"))


def _intercept(rho) -> FieldElement:
    rho = parse_field(rho) if isinstance(rho, str) else FieldElement.coerce(rho)
    if rho == 0:
        raise InfiniteResult()
    if not 0 < rho < 1:
        raise ValueError(f"intercept {rho} outside [0, 1)")
    return rho


# -- the renormalisation loop ------------------------------------------------------


@dataclass(frozen=True)
class AlgorithmState:
    """``R < R'`` are the two ``[0, delta_step)``-itineraries of the original
    exchange; ``epsilon`` is the slope of the induced exchange at that scale."""

    step: int
    epsilon: ContinuedFraction
    r: BinaryWord
    r_prime: BinaryWord
    collected: tuple[BinaryWord, ...] = field(default=ZERO_ONE)

    @property
    def concatenation(self) -> BinaryWord:
        return self.r + self.r_prime

    def advance(self, invert_lex: bool = False) -> AlgorithmState:
        """Pass to the next smaller delta.

        ``invert_lex`` flips the lexicographic comparison; it exists only as a
        negative control for the verification harness.
        """
        rr = self.concatenation
        collected = self.collected + (rr,)
        if self.epsilon.exceeds_half():
            r, r_prime = self.r, rr
        else:
            smaller = rr < self.r_prime
            if invert_lex:
                smaller = not smaller
            r, r_prime = (rr, self.r_prime) if smaller else (self.r_prime, rr)
        return AlgorithmState(self.step + 1, self.epsilon.renormalized(), r, r_prime, collected)


def algorithm_states(alpha, count: int, invert_lex: bool = False) -> Iterator[AlgorithmState]:
    """The first ``count`` states, starting from ``(R, R') = (0, 1)`` at ``delta_0 = 1``."""
    state = AlgorithmState(0, as_slope(alpha), *ZERO_ONE)
    for i in range(count):
        yield state
        if i + 1 < count:
            state = state.advance(invert_lex)


def r_set_size(cf: ContinuedFraction, idx: MinimalIndices) -> int:
    """``1 + a_1 + ... + a_k + s`` for the minimal indices ``(k, s)``."""
    return 1 + sum(cf.a(i) for i in range(1, idx.k + 1)) + idx.s


def r_set(alpha, rho, invert_lex: bool = False) -> tuple[BinaryWord, ...]:
    """Abelian returns to all light prefixes of ``u_{alpha, rho}``.

    Every delta strictly above ``rho`` contributes one concatenation ``RR'``,
    so the loop runs ``N - 2`` times for ``N = 1 + a_1 + ... + a_k + s``.
    """
    cf = as_slope(alpha)
    rho = _intercept(rho)
    idx = minimal_indices(cf, rho)
    n = r_set_size(cf, idx)
    assert n == idx.flat_index + 2
    state = AlgorithmState(0, cf, *ZERO_ONE)
    for _ in range(n - 2):
        state = state.advance(invert_lex)
    return canonical_order(state.collected)


def r_prime_set(alpha, rho, invert_lex: bool = False) -> tuple[BinaryWord, ...]:
    """Abelian returns to all heavy prefixes, via ``E(R(1 - alpha, 1 - rho))``."""
    cf = as_slope(alpha)
    rho = _intercept(rho)
    return canonical_order(w.exchanged() for w in r_set(cf.complement(), 1 - rho, invert_lex))


# -- the full set ---------------------------------------------------------------


class Cardinality(NamedTuple):
    count: int
    case: str  # "i-a", "i-b" or "ii"


@dataclass(frozen=True)
class ReturnSetResult:
    slope: ContinuedFraction
    intercept: FieldElement
    r_set: tuple[BinaryWord, ...]
    r_prime_set: tuple[BinaryWord, ...]
    apr: tuple[BinaryWord, ...]
    indices: MinimalIndices
    cardinality: Cardinality

    @property
    def counts(self) -> dict[str, int]:
        return {"n_r": len(self.r_set), "n_rprime": len(self.r_prime_set),
                "n_apr": len(self.apr)}


def apr_set(alpha, rho, invert_lex: bool = False) -> ReturnSetResult:
    """``APR(u_{alpha, rho})`` with its light/heavy parts and the predicted size."""
    cf = as_slope(alpha)
    rho = _intercept(rho)
    light = r_set(cf, rho, invert_lex)
    heavy = r_prime_set(cf, rho, invert_lex)
    union = canonical_order(light + heavy)
    idx = minimal_indices(cf, rho)
    card = apr_cardinality(cf, rho)

    problems = []
    if set(light) & set(heavy) != set(ZERO_ONE):
        problems.append("light and heavy returns must share exactly {0, 1}")
    if not {"0", "1", "01", "10"} <= set(union):
        problems.append("{0, 1, 01, 10} must be contained in APR")
    if len(light) != r_set_size(cf, idx):
        problems.append("size of R disagrees with 1 + a_1 + ... + a_k + s")
    if len(union) != card.count:
        problems.append(f"|APR| = {len(union)} but the cardinality formula gives {card.count}")
    if problems:
        raise AssertionError(f"alpha={cf}, rho={rho}: " + "; ".join(problems))
    return ReturnSetResult(cf, rho, light, heavy, union, idx, card)


def apr_cardinality(alpha, rho) -> Cardinality:
    """Closed-form ``#APR(u_{alpha, rho})``.

    The formulas are stated for ``alpha < 1/2``; a larger slope is first
    replaced by ``(1 - alpha, 1 - rho)``, which exchanges the letters and
    leaves the count unchanged.
    """
    cf = as_slope(alpha)
    rho = _intercept(rho)
    if cf.exceeds_half():
        cf, rho = cf.complement(), 1 - rho
    a = cf.value()
    a1 = cf.a(1)
    if a < rho < 1 - a:
        l = math.ceil(rho / a)  # (l-1) alpha < rho <= l alpha
        if rho < 1 - (a1 - l + 1) * a:
            return Cardinality(a1 + 4, "i-a")
        return Cardinality(a1 + 3, "i-b")
    k, s, _ = minimal_indices(cf, min(rho, 1 - rho))
    return Cardinality(2 + sum(cf.a(i) for i in range(1, k + 1)) + s, "ii")


def characteristic_apr(alpha) -> tuple[BinaryWord, ...]:
    """Closed form of APR for the characteristic word (intercept ``1 - alpha``)."""
    cf = as_slope(alpha)
    if cf.exceeds_half():
        words = ["1", "10", "0"] + ["0" * j + "1" for j in range(1, cf.a(2) + 2)]
    else:
        words = ["0", "01", "1"] + ["1" * j + "0" for j in range(1, cf.a(1) + 1)]
    return canonical_order(words)


def light_or_heavy(alpha, rho, n: int) -> str:
    """Whether the length-``n`` prefix carries the larger (light) or smaller number of 0s."""
    cf = as_slope(alpha)
    rho = parse_field(rho) if isinstance(rho, str) else FieldElement.coerce(rho)
    if not 0 <= rho < 1:
        raise ValueError(f"intercept {rho} outside [0, 1)")
    boundary = inverse_iterate_alpha(make_two_iet(cf.value()), n)
    return "light" if rho < boundary else "heavy"

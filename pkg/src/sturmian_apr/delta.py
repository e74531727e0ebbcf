"""The decreasing sequence of three-gap lengths attached to a slope.

For ``alpha = [0; a1, a2, ...]`` with convergents ``p_k/q_k`` the values

    delta_{k,s} = |(s-1)(p_k - alpha q_k) + p_{k-1} - alpha q_{k-1}|,
    k >= 0, 1 <= s <= a_{k+1},

strictly decrease along the lexicographic order of ``(k, s)``.  Flattening
that order gives ``delta_0 = 1 > delta_1 = max(alpha, 1-alpha) > ...``; these
are exactly the lengths ``beta`` for which ``[0, beta)`` induces a
two-interval exchange.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, NamedTuple

from .contfrac import ContinuedFraction, cf_to_field
from .errors import InfiniteResult
from .field import FieldElement

__all__ = ["DeltaValue", "MinimalIndices", "delta", "delta_stream", "delta_values",
           "minimal_indices"]


@dataclass(frozen=True)
class DeltaValue:
    k: int
    s: int
    value: FieldElement
    flat_index: int


class MinimalIndices(NamedTuple):
    k: int
    s: int
    flat_index: int


def delta_stream(cf: ContinuedFraction) -> Iterator[DeltaValue]:
    """Lazily enumerate ``delta_{k,s}`` in lexicographic order of ``(k, s)``.

    Uses ``theta_k = p_k - alpha q_k``, which obeys the convergent recurrence
    ``theta_{k+1} = a_{k+1} theta_k + theta_{k-1}`` with ``theta_{-1} = 1``,
    ``theta_0 = -alpha``.
    """
    alpha = cf_to_field(cf)
    theta_prev, theta = FieldElement(1), -alpha
    n = 0
    k = 0
    for a_next in cf:
        for s in range(1, a_next + 1):
            yield DeltaValue(k, s, abs((s - 1) * theta + theta_prev), n)
            n += 1
        theta_prev, theta = theta, a_next * theta + theta_prev
        k += 1


def delta_values(cf: ContinuedFraction, count: int) -> list[DeltaValue]:
    return list(islice(delta_stream(cf), count))


def delta(cf: ContinuedFraction, k: int, s: int) -> DeltaValue:
    if k < 0:
        raise ValueError("k must be non-negative")
    a = cf.a(k + 1)
    if not 1 <= s <= a:
        raise ValueError(f"s={s} outside [1, a_{k + 1}={a}]")
    for dv in delta_stream(cf):
        if dv.k == k and dv.s == s:
            return dv
    raise AssertionError("unreachable for an infinite expansion")


def minimal_indices(cf: ContinuedFraction, rho) -> MinimalIndices:
    """Lexicographically least ``(k, s)`` with ``delta_{k,s} <= rho`` (ties count)."""
    rho = FieldElement.coerce(rho)
    if rho <= 0:
        raise InfiniteResult("rho <= 0: infinitely many delta values exceed it")
    if rho >= 1:
        raise ValueError("rho must be < 1")
    for dv in delta_stream(cf):
        if dv.value <= rho:
            return MinimalIndices(dv.k, dv.s, dv.flat_index)
    raise AssertionError("unreachable: delta values tend to 0")

"""Seeded random slopes and intercepts for the verification suites."""

from __future__ import annotations

import random

from .contfrac import ContinuedFraction
from .field import FieldElement

__all__ = ["random_slope", "random_intercept", "random_pairs"]


def random_slope(rng: random.Random, max_digit: int = 4, max_pre: int = 2,
                 max_period: int = 3) -> ContinuedFraction:
    """Eventually periodic slope with small partial quotients (1 is most likely)."""
    weights = [1.0 / k for k in range(1, max_digit + 1)]
    digits = range(1, max_digit + 1)
    pre = rng.choices(digits, weights, k=rng.randint(0, max_pre))
    per = rng.choices(digits, weights, k=rng.randint(1, max_period))
    return ContinuedFraction(tuple(pre), tuple(per))


def random_intercept(rng: random.Random, alpha: FieldElement, max_den: int = 24) -> FieldElement:
    """Non-zero intercept in the field of ``alpha``: a rational, or ``{i*alpha + j/q}``."""
    if rng.random() < 0.5:
        q = rng.randint(2, max_den)
        return FieldElement.rational(rng.randint(1, q - 1), q)
    while True:
        q = rng.randint(1, max_den)
        x = (rng.randint(-6, 6) * alpha + FieldElement.rational(rng.randint(0, q - 1), q)).frac()
        if x:
            return x


def random_pairs(seed: int, count: int, **slope_kw):
    """``count`` pairs ``(ContinuedFraction, FieldElement)`` from one seeded stream."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        cf = random_slope(rng, **slope_kw)
        out.append((cf, random_intercept(rng, cf.value())))
    return out

"""Eventually periodic continued fractions of numbers in (0, 1)."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import islice

from .errors import ParseError, RationalSlopeError
from .field import FieldElement, parse_field, squarefree_split

__all__ = [
    "ContinuedFraction",
    "Convergents",
    "cf_to_field",
    "field_to_cf",
    "convergents",
    "as_slope",
]


def _canonical(preperiod: tuple, period: tuple) -> tuple[tuple, tuple]:
    if period:
        # shortest repeating block
        n = len(period)
        for k in range(1, n + 1):
            if n % k == 0 and period[:k] * (n // k) == period:
                period = period[:k]
                break
        # absorb a preperiod that already follows the periodic pattern
        pre = list(preperiod)
        per = list(period)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        return tuple(pre), tuple(per)
    pre = list(preperiod)
    # [.., a, 1] == [.., a + 1]; the lone [1] stays (value 1 is rejected elsewhere)
    if len(pre) > 1 and pre[-1] == 1:
        pre.pop()
        pre[-1] += 1
    return tuple(pre), ()


@dataclass(frozen=True)
class ContinuedFraction:
    """``[0; a1, ..., am, (b1, ..., bk)]`` with the block ``b`` repeated forever.

    An empty ``period`` means a finite expansion, i.e. a rational number.
    Instances are stored in canonical (shortest) form, so equal values have
    equal representations.
    """

    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self):
        pre = tuple(int(a) for a in self.preperiod)
        per = tuple(int(a) for a in self.period)
        if any(a < 1 for a in pre + per):
            raise ValueError("partial quotients must be positive integers")
        if not pre and not per:
            raise ValueError("empty continued fraction")
        if not per and pre == (1,):
            raise ValueError("[0;1] == 1 is not in (0, 1)")
        pre, per = _canonical(pre, per)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    # construction ----------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> ContinuedFraction:
        """Parse ``[0;a1,a2,...,(b1,...,bk)]``; the period must be parenthesised."""
        m = re.fullmatch(r"\s*\[\s*0\s*;\s*(.*?)\s*\]\s*", text)
        if m is None:
            raise ParseError(f"continued fraction must look like [0;a1,...,(b1,...)]: {text!r}")
        body = m.group(1)
        pm = re.fullmatch(r"(.*?)\s*,?\s*\(\s*([\d\s,]+?)\s*\)\s*", body)
        head, tail = (pm.group(1), pm.group(2)) if pm else (body, "")
        try:
            pre = [int(t) for t in head.split(",") if t.strip()]
            per = [int(t) for t in tail.split(",") if t.strip()]
            return cls(tuple(pre), tuple(per))
        except ValueError as exc:
            raise ParseError(f"bad continued fraction {text!r}: {exc}") from exc

    @classmethod
    def from_field(cls, x: FieldElement) -> ContinuedFraction:
        """Exact expansion of ``x`` in (0, 1); quadratic irrationals come out periodic."""
        x = FieldElement.coerce(x)
        if not 0 < x < 1:
            raise ValueError("value must lie in (0, 1)")
        digits = []
        seen = {}
        while True:
            if not x:
                return cls(tuple(digits), ())
            key = (x.a, x.b, x.c)
            if key in seen:
                i = seen[key]
                return cls(tuple(digits[:i]), tuple(digits[i:]))
            seen[key] = len(digits)
            y = x.inverse()
            a = math.floor(y)
            digits.append(a)
            x = y - a

    # digit access ------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return not self.period

    def a(self, k: int) -> int:
        """Partial quotient ``a_k`` (1-based, as in ``[0; a1, a2, ...]``)."""
        if k < 1:
            raise IndexError("partial quotients are indexed from 1")
        m = len(self.preperiod)
        if k <= m:
            return self.preperiod[k - 1]
        if not self.period:
            raise IndexError("finite continued fraction exhausted")
        return self.period[(k - m - 1) % len(self.period)]

    def __iter__(self):
        yield from self.preperiod
        while self.period:
            yield from self.period

    def digits(self, n: int) -> list[int]:
        return list(islice(self, n))

    def unfolded(self, m: int) -> tuple[list[int], tuple[int, ...]]:
        """Split into at least ``m`` explicit leading digits plus a rotated period."""
        pre = list(self.preperiod)
        per = list(self.period)
        while len(pre) < m:
            if not per:
                break
            pre.append(per[0])
            per = per[1:] + per[:1]
        return pre, tuple(per)

    # derived slopes ------------------------------------------------------------

    def complement(self) -> ContinuedFraction:
        """Continued fraction of ``1 - x``."""
        pre, per = self.unfolded(2)
        if pre[0] >= 2:
            return ContinuedFraction(tuple([1, pre[0] - 1] + pre[1:]), per)
        if len(pre) < 2:
            raise ValueError("1 - [0;1] is not in (0, 1)")
        return ContinuedFraction(tuple([pre[1] + 1] + pre[2:]), per)

    def renormalized(self) -> ContinuedFraction:
        """Slope of the map induced on ``[0, max(x, 1-x))``.

        ``(2x - 1)/x`` when ``x > 1/2`` and ``x/(1 - x)`` when ``x < 1/2``,
        carried out on the digits.
        """
        if self.is_rational:
            raise RationalSlopeError("renormalisation needs an irrational slope")
        pre, per = self.unfolded(3)
        if pre[0] >= 2:
            return ContinuedFraction(tuple([pre[0] - 1] + pre[1:]), per)
        if pre[1] >= 2:
            return ContinuedFraction(tuple([1, pre[1] - 1] + pre[2:]), per)
        return ContinuedFraction(tuple([pre[2] + 1] + pre[3:]), per)

    def exceeds_half(self) -> bool:
        """``x > 1/2``, read off the first partial quotient."""
        return self.a(1) == 1

    def value(self) -> FieldElement:
        return cf_to_field(self, allow_rational=True)

    def __str__(self):
        parts = [str(a) for a in self.preperiod]
        if self.period:
            parts.append("(" + ",".join(str(b) for b in self.period) + ")")
        return "[0;" + ",".join(parts) + "]"


def _mobius(digits) -> tuple[int, int, int, int]:
    """Return ``(p_m, p_{m-1}, q_m, q_{m-1})`` for ``[0; digits]``."""
    p, p_prev, q, q_prev = 0, 1, 1, 0
    for a in digits:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    return p, p_prev, q, q_prev


def cf_to_field(cf: ContinuedFraction, allow_rational: bool = False) -> FieldElement:
    """Exact value of an eventually periodic continued fraction.

    The purely periodic tail ``y`` solves ``q' y^2 + (q - p') y - p = 0``
    where ``p/q`` and ``p'/q'`` are the last two convergents of one period;
    the preperiod is folded in with its own convergents.
    """
    if cf.is_rational:
        if not allow_rational:
            raise RationalSlopeError(f"{cf} is rational")
        p, _, q, _ = _mobius(cf.preperiod)
        return FieldElement.rational(p, q)
    P, P1, Q, Q1 = _mobius(cf.period)
    disc = (Q - P1) ** 2 + 4 * Q1 * P
    f, d = squarefree_split(disc)
    y = FieldElement(P1 - Q, f, 2 * Q1, d)  # positive root
    p, p1, q, q1 = _mobius(cf.preperiod)
    return (p + y * p1) / (q + y * q1)


def field_to_cf(x: FieldElement, n: int) -> tuple[list[int], bool]:
    """First ``n`` partial quotients of ``x`` in (0, 1) by the exact Gauss map.

    Returns ``(digits, terminated)``; ``terminated`` is true when the
    expansion of a rational ended before ``n`` digits.
    """
    x = FieldElement.coerce(x)
    if not 0 < x < 1:
        raise ValueError("value must lie in (0, 1)")
    digits = []
    while len(digits) < n:
        if not x:
            return digits, True
        y = x.inverse()
        a = math.floor(y)
        digits.append(a)
        x = y - a
    return digits, (not x)


@dataclass(frozen=True)
class Convergents:
    """Numerators and denominators ``p_k, q_k`` for ``k = -1 .. K``.

    The tuples are stored with offset one: ``p[0]`` is ``p_{-1}``.
    """

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __getitem__(self, k: int) -> tuple[int, int]:
        if k < -1:
            raise IndexError(k)
        return self.p[k + 1], self.q[k + 1]

    @property
    def last_index(self) -> int:
        return len(self.p) - 2


def convergents(cf: ContinuedFraction, k: int) -> Convergents:
    if k < 0:
        raise ValueError("k must be non-negative")
    p = [1, 0]
    q = [0, 1]
    for i in range(1, k + 1):
        a = cf.a(i)
        p.append(a * p[-1] + p[-2])
        q.append(a * q[-1] + q[-2])
    return Convergents(tuple(p), tuple(q))


def as_slope(alpha) -> ContinuedFraction:
    """Accept a ContinuedFraction, a FieldElement or their text forms."""
    if isinstance(alpha, str):
        alpha = ContinuedFraction.parse(alpha) if alpha.lstrip().startswith("[") \
            else parse_field(alpha)
    if isinstance(alpha, FieldElement):
        alpha = ContinuedFraction.from_field(alpha)
    if not isinstance(alpha, ContinuedFraction):
        raise TypeError(f"cannot use {type(alpha).__name__} as a slope")
    if alpha.is_rational:
        raise RationalSlopeError(f"slope {alpha} is rational")
    return alpha

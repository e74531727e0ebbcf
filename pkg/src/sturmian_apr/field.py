"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

Every value handled by the package (slopes, intercepts, interval endpoints,
orbit points) is an element ``(a + b*sqrt(d)) / c`` with integer ``a, b``,
positive integer ``c`` and square-free ``d``.  Comparisons are decided with
integer arithmetic only.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

from .errors import IncompatibleFieldError, ParseError

__all__ = ["FieldElement", "squarefree_split", "parse_field"]


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(f, d)`` with ``n == f*f*d`` and ``d`` square-free.

    Trial division runs up to the cube root of what is left; a remaining
    cofactor can then only carry a square factor if it is itself a square.
    """
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0, 0
    f, d = 1, 1
    p = 2
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(n)
    if r * r == n:
        f *= r
    else:
        d *= n
    return f, d


def _sign_surd(a: int, b: int, d: int) -> int:
    """Sign of ``a + b*sqrt(d)`` for square-free ``d``."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    # opposite signs: compare a^2 against b^2 d (never equal, d is square-free > 1)
    s = a * a - b * b * d
    return (1 if s > 0 else -1) if a > 0 else (1 if s < 0 else -1)


class FieldElement:
    """The number ``(a + b*sqrt(d)) / c``.

    Instances are immutable and normalised: ``c > 0``, ``gcd(a, b, c) == 1``,
    ``d`` square-free and ``d == 0`` whenever ``b == 0``.  Rationals carry
    ``d == 0`` and mix freely with any field; two irrationals with different
    radicands refuse to combine.
    """

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a: int = 0, b: int = 0, c: int = 1, d: int = 0):
        if c == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            raise ValueError("only real quadratic fields are supported")
        if b != 0 and d != 0:
            f, d = squarefree_split(d)
            b *= f
            if d == 1:
                a, b, d = a + b, 0, 0
        if b == 0 or d == 0:
            b, d = 0, 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a //= g
            b //= g
            c //= g
        self.a = a
        self.b = b
        self.c = c
        self.d = d
        self._hash = None

    @classmethod
    def _new(cls, a: int, b: int, c: int, d: int) -> FieldElement:
        # d is already square-free here; skips the factorisation in __init__
        if b == 0:
            d = 0
        elif d == 0:
            b = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        if g > 1:
            a //= g
            b //= g
            c //= g
        obj = object.__new__(cls)
        obj.a = a
        obj.b = b
        obj.c = c
        obj.d = d
        obj._hash = None
        return obj

    # construction -----------------------------------------------------------

    @classmethod
    def rational(cls, p, q=1) -> FieldElement:
        fr = Fraction(p, q)
        return cls(fr.numerator, 0, fr.denominator)

    @classmethod
    def sqrt(cls, n: int) -> FieldElement:
        return cls(0, 1, 1, n)

    @classmethod
    def parse(cls, text: str) -> FieldElement:
        return parse_field(text)

    @classmethod
    def coerce(cls, value) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, (int, Rational)):
            return cls.rational(value)
        raise TypeError(f"cannot convert {type(value).__name__} to FieldElement")

    # predicates --------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.d == 0

    def sign(self) -> int:
        return _sign_surd(self.a, self.b, self.d)

    def _common_d(self, other: FieldElement) -> int:
        if self.d == other.d or other.d == 0:
            return self.d
        if self.d == 0:
            return other.d
        raise IncompatibleFieldError(
            f"cannot combine elements of Q(sqrt({self.d})) and Q(sqrt({other.d}))")

    # arithmetic --------------------------------------------------------------

    def __add__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        return FieldElement._new(self.a * other.c + other.a * self.c,
                                 self.b * other.c + other.b * self.c,
                                 self.c * other.c, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._new(-self.a, -self.b, self.c, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._common_d(other)
        return FieldElement._new(self.a * other.a + self.b * other.b * d,
                                 self.a * other.b + self.b * other.a,
                                 self.c * other.c, d)

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            # only the zero element has zero norm in a genuine quadratic field
            raise ZeroDivisionError("division by zero")
        return FieldElement._new(self.c * self.a, -self.c * self.b, norm, self.d)

    def __truediv__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        self._common_d(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = FieldElement(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    # comparison --------------------------------------------------------------

    def _cmp(self, other) -> int:
        other = FieldElement.coerce(other)
        self._common_d(other)
        return _sign_surd(self.a * other.c - other.a * self.c,
                          self.b * other.c - other.b * self.c,
                          self.d or other.d)

    def __eq__(self, other):
        try:
            other = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __lt__(self, other):
        try:
            return self._cmp(other) < 0
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._cmp(other) <= 0
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._cmp(other) > 0
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._cmp(other) >= 0
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.d == 0:
                self._hash = hash(Fraction(self.a, self.c))
            else:
                self._hash = hash((self.a, self.b, self.c, self.d))
        return self._hash

    def __bool__(self):
        return self.a != 0 or self.b != 0

    # rounding ----------------------------------------------------------------

    def __floor__(self) -> int:
        # floor(X / c) == floor(floor(X) / c) for integer c > 0
        if self.d == 0:
            return self.a // self.c
        r2 = self.b * self.b * self.d
        r = math.isqrt(r2)
        if self.b > 0:
            num_floor = self.a + r
        else:
            num_floor = self.a - r - (0 if r * r == r2 else 1)
        return num_floor // self.c

    def __ceil__(self) -> int:
        return -math.floor(-self)

    def frac(self) -> FieldElement:
        return self - math.floor(self)

    def approx(self, digits: int = 12) -> str:
        """Decimal string truncated (towards minus infinity) to ``digits`` places."""
        scaled = math.floor(self * 10 ** digits)
        sign = "-" if scaled < 0 else ""
        whole, rest = divmod(abs(scaled), 10 ** digits)
        return f"{sign}{whole}.{rest:0{digits}d}"

    def __float__(self):
        # test witness only; the library never decides anything in floating point
        return float(Fraction(math.floor(self * 2 ** 80), 2 ** 80))

    # text --------------------------------------------------------------------

    def __str__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        if d == 0:
            return f"{a}" if c == 1 else f"{a}/{c}"
        mag = abs(b)
        surd = f"sqrt({d})" if mag == 1 else f"{mag}*sqrt({d})"
        if a == 0:
            num = surd if b > 0 else f"-{surd}"
            return num if c == 1 else f"{num}/{c}"
        num = f"{a}{'+' if b > 0 else '-'}{surd}"
        return num if c == 1 else f"({num})/{c}"

    def __repr__(self):
        return f"FieldElement({self.a}, {self.b}, {self.c}, {self.d})"

    def __reduce__(self):
        return (FieldElement, (self.a, self.b, self.c, self.d))


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|(.))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("sqrt", None))
        else:
            ch = m.group(3)
            if ch not in "+-*/()":
                raise ParseError(f"unexpected character {ch!r} in {text!r}")
            tokens.append((ch, None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind=None):
        if self.i >= len(self.tokens):
            raise ParseError(f"unexpected end of input in {self.text!r}")
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[0]!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty field element")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise ParseError(f"division by zero in {self.text!r}")
                value = value / rhs
        return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.atom()

    def atom(self):
        kind = self.peek()
        if kind == "int":
            return FieldElement(self.take()[1])
        if kind == "sqrt":
            self.take()
            self.take("(")
            n = self.take("int")[1]
            self.take(")")
            return FieldElement.sqrt(n)
        if kind == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        raise ParseError(f"unexpected token {kind!r} in {self.text!r}")


def parse_field(text: str) -> FieldElement:
    """Parse expressions such as ``(3-sqrt(5))/2``, ``7/12`` or ``2*sqrt(2)-1``."""
    try:
        return _Parser(text).parse()
    except IncompatibleFieldError as exc:
        raise ParseError(str(exc)) from exc

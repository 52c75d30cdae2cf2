"""Exact scalars over Q and Q(i).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
get a small value type that interoperates with ``Fraction`` and ``int`` and
collapses back to ``Fraction`` whenever an arithmetic result is real, so that
real-valued computations routed through Q(i) compare equal to their rational
counterparts structurally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import InvalidParams, ScalarDivisionByZero, ScalarParseError

__all__ = [
    "Fraction",
    "GaussianRational",
    "I",
    "Scalar",
    "as_scalar",
    "conjugate",
    "from_json",
    "is_real",
    "parse_scalar",
    "render_scalar",
    "scalar_arith",
    "to_json",
]


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _make(re: Fraction, im: Fraction) -> "Scalar":
        if im == 0:
            return re
        return GaussianRational(re, im)

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianRational):
            return other.re, other.im
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self._make(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self._make(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self._make(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = p
        return self._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        norm = c * c + d * d
        if norm == 0:
            raise ScalarDivisionByZero("division by zero in Q(i)")
        a, b = self.re, self.im
        return self._make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianRational(*p) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / (self ** -exponent)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self):
        return self._make(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        return render_scalar(self)


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions, Gaussian rationals and scalar strings."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, GaussianRational):
        return value if value.im != 0 else value.re
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def is_real(value: Scalar) -> bool:
    return not isinstance(value, GaussianRational) or value.im == 0


def conjugate(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return value


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return as_scalar(a + b)
    if op == "sub":
        return as_scalar(a - b)
    if op == "mul":
        return as_scalar(a * b)
    if op == "div":
        if b == 0:
            raise ScalarDivisionByZero(f"cannot divide {render_scalar(a)} by zero")
        return as_scalar(a / b)
    raise InvalidParams(f"unknown operation {op!r}")


# -- text grammar ----------------------------------------------------------
#   scalar   := rational | rational? sign rational? 'i' | rational? 'i'
#   rational := sign? digits ('/' digits)?
# The unicode minus sign is accepted as an alias for '-'.


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, reason="unexpected character"):
        raise ScalarParseError(self.text, self.pos, reason)

    def sign(self) -> int | None:
        c = self.peek()
        if c == "+":
            self.pos += 1
            return 1
        if c and c in "-−":
            self.pos += 1
            return -1
        return None

    def digits(self) -> int | None:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if self.pos == start:
            return None
        return int(self.text[start:self.pos])

    def unsigned_rational(self) -> Fraction | None:
        num = self.digits()
        if num is None:
            return None
        if self.peek() == "/":
            self.pos += 1
            den = self.digits()
            if den is None:
                self.fail("expected denominator digits")
            if den == 0:
                self.pos -= 1
                self.fail("zero denominator")
            return Fraction(num, den)
        return Fraction(num)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"-3/4"``, ``"5"``, ``"1/2+2/3i"``, ``"-i"`` and friends."""
    s = _Scanner(text.strip())
    if not s.text:
        s.fail("empty input")
    sgn = s.sign() or 1
    first = s.unsigned_rational()
    if s.peek() == "i":
        s.pos += 1
        if s.pos != len(s.text):
            s.fail()
        return as_scalar(GaussianRational(0, sgn * (1 if first is None else first)))
    if first is None:
        s.fail("expected digits")
    re = sgn * first
    if s.pos == len(s.text):
        return re
    isgn = s.sign()
    if isgn is None:
        s.fail()
    im = s.unsigned_rational()
    if s.peek() != "i":
        s.fail("expected 'i'")
    s.pos += 1
    if s.pos != len(s.text):
        s.fail()
    return as_scalar(GaussianRational(re, isgn * (1 if im is None else im)))


def _render_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def render_scalar(value: Scalar) -> str:
    value = as_scalar(value)
    if isinstance(value, GaussianRational):
        sign = "-" if value.im < 0 else "+"
        return f"{_render_rational(value.re)}{sign}{_render_rational(abs(value.im))}i"
    return _render_rational(value)


def to_json(value: Scalar):
    value = as_scalar(value)
    if isinstance(value, GaussianRational):
        return {"re": _render_rational(value.re), "im": _render_rational(value.im)}
    return _render_rational(value)


def from_json(obj) -> Scalar:
    if isinstance(obj, dict):
        try:
            re, im = obj["re"], obj["im"]
        except KeyError as exc:
            raise InvalidParams(f"Gaussian scalar is missing {exc.args[0]!r}") from None
        return as_scalar(GaussianRational(parse_scalar(re), parse_scalar(im)))
    if isinstance(obj, str):
        value = parse_scalar(obj)
        if isinstance(value, GaussianRational):
            raise InvalidParams("Gaussian scalars are encoded as {'re': ..., 'im': ...}")
        return value
    raise InvalidParams(f"cannot decode scalar from {obj!r}")

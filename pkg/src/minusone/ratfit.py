"""Exact rational-function fitting from sampled values.

Used to read off the degrees of entries that are rational functions of an
index (or of a parameter) without building them symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy
from sympy.polys.polyfuncs import rational_interpolate

from .errors import InsufficientSamples
from .field import Scalar, is_real

_X = sympy.Symbol("x")


@dataclass(frozen=True)
class RationalFit:
    """``num/den`` with ``den`` monic; coefficients constant term first."""

    num: tuple
    den: tuple

    @property
    def degrees(self) -> tuple[int, int]:
        return len(self.num) - 1 if any(self.num) else 0, len(self.den) - 1

    def __call__(self, x: Scalar) -> Fraction:
        return _horner(self.num, x) / _horner(self.den, x)


def _horner(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _to_sympy(v: Scalar) -> sympy.Rational:
    if not is_real(v):
        raise ValueError("rational fitting needs rational samples")
    v = Fraction(v)
    return sympy.Rational(v.numerator, v.denominator)


def _coeffs(poly: sympy.Poly) -> tuple:
    return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs()))


def fit_rational(xs: Sequence[Scalar], ys: Sequence[Scalar], max_degree: int | None = None) -> RationalFit:
    """Minimal-total-degree rational function through all points.

    A candidate of total degree D is interpolated through D + 1 points and
    accepted only if it reproduces every sample; at least 2D + 2 samples are
    required so that the accepted fit is unique.
    """
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    pts = [(_to_sympy(x), _to_sympy(y)) for x, y in zip(xs, ys)]
    if len({p[0] for p in pts}) != len(pts):
        raise ValueError("sample abscissae must be distinct")
    limit = (len(pts) - 2) // 2 if max_degree is None else max_degree
    for total in range(limit + 1):
        for degnum in range(total, -1, -1):
            fit = _try(pts, degnum, total)
            if fit is not None:
                if len(pts) < 2 * total + 2:
                    raise InsufficientSamples(f"{len(pts)} samples cannot certify total degree {total}")
                return fit
    raise InsufficientSamples(f"no rational function of total degree <= {limit} fits {len(pts)} samples")


def _try(pts, degnum: int, total: int) -> RationalFit | None:
    head = pts[: total + 1]
    try:
        expr = sympy.cancel(rational_interpolate(head, degnum, X=_X))
    except (ZeroDivisionError, ValueError, sympy.polys.polyerrors.PolynomialError):
        return None
    num, den = sympy.fraction(expr)
    num, den = sympy.Poly(num, _X), sympy.Poly(den, _X)
    if den.is_zero:
        return None
    lead = den.LC()
    num, den = sympy.Poly(num.as_expr() / lead, _X), den.monic()
    fit = RationalFit(_coeffs(num), _coeffs(den))
    for x, y in pts:
        d = _horner(fit.den, Fraction(int(x.p), int(x.q)))
        if d == 0 or _horner(fit.num, Fraction(int(x.p), int(x.q))) / d != Fraction(int(y.p), int(y.q)):
            return None
    return fit


def poly_from_roots(roots_with_mult: Sequence[tuple[Scalar, int]]) -> tuple:
    """Monic polynomial prod (x - root)^mult, constant term first."""
    out = [Fraction(1)]
    for root, mult in roots_with_mult:
        for _ in range(mult):
            nxt = [Fraction(0)] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] += c
                nxt[i] -= root * c
            out = nxt
    return tuple(out)


def square_free_multiplicities(coeffs: Sequence[Fraction]) -> list[int]:
    """Multiplicities of the irreducible factors of a polynomial over Q."""
    poly = sympy.Poly([_to_sympy(c) for c in reversed(coeffs)], _X)
    _, factors = sympy.factor_list(poly.as_expr())
    return sorted(m for _, m in factors)


def is_perfect_square(coeffs: Sequence[Fraction]) -> bool:
    if len(coeffs) <= 1:
        return True
    return all(m % 2 == 0 for m in square_free_multiplicities(coeffs))

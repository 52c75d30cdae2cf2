"""Recurrence coefficients ``u[n+1] = (t - beta_n) u[n] - alpha_n u[n-1]``.

One generator works from the lattice sequences directly; the others evaluate
closed forms under different parametrizations of the minus-one lattice.  The
closed forms are written so that every index n >= 0 is covered: where the
generic even-n beta expression degenerates to 0/0 at n = 0 the cancelled
form is used instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .banded import BandedMatrix
from .errors import DenominatorZero, InvalidParams
from .field import I, Scalar, as_scalar, conjugate, is_real
from .seqs import MINUS_ONE_TAG, LatticeSeqs, ParamSet

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RecurrencePair:
    """``alpha[i]`` holds alpha_{i+1}; ``beta[i]`` holds beta_i."""

    alpha: tuple
    beta: tuple

    def __post_init__(self):
        if len(self.alpha) + 1 != len(self.beta):
            raise ValueError("need alpha_1..alpha_N and beta_0..beta_N")

    @property
    def N(self) -> int:
        return len(self.alpha)

    def a(self, n: int) -> Scalar:
        if n < 1:
            raise IndexError("alpha is indexed from 1")
        return self.alpha[n - 1]

    def b(self, n: int) -> Scalar:
        return self.beta[n]

    def truncate(self, N: int) -> "RecurrencePair":
        return RecurrencePair(self.alpha[:N], self.beta[: N + 1])


@dataclass(frozen=True)
class JacobiMatrix:
    diag: tuple
    sub: tuple

    @property
    def N(self) -> int:
        return len(self.diag) - 1

    def to_banded(self) -> BandedMatrix:
        n = len(self.diag)
        return BandedMatrix(n, {0: list(self.diag), -1: list(self.sub), 1: [Fraction(1)] * (n - 1)})

    def pair(self) -> RecurrencePair:
        return RecurrencePair(tuple(self.sub), tuple(self.diag))


def jacobi(rp: RecurrencePair) -> JacobiMatrix:
    return JacobiMatrix(tuple(rp.beta), tuple(rp.alpha))


def _build(N: int, alpha_at: Callable[[int], Scalar], beta_at: Callable[[int], Scalar]) -> RecurrencePair:
    if N < 0:
        raise InvalidParams("order must be non-negative")
    return RecurrencePair(
        tuple(as_scalar(alpha_at(n)) for n in range(1, N + 1)),
        tuple(as_scalar(beta_at(n)) for n in range(N + 1)),
    )


def _nonzero(value: Scalar, index: int, what: str) -> Scalar:
    if value == 0:
        raise DenominatorZero(index, what)
    return value


# -- from the lattice ------------------------------------------------------


def coeffs_general(seqs: LatticeSeqs, N: int) -> RecurrencePair:
    """alpha_1..alpha_N and beta_0..beta_N from x, h, g; seqs must reach N + 1."""
    if seqs.N < N + 1:
        raise InvalidParams(f"sequences must be built to order {N + 1} for {N} recurrence steps")
    x, h, g = seqs.x, seqs.h, seqs.g

    def ratio(i: int, j: int, k: int) -> Scalar:
        # g_i / (h_j - h_k); terms reaching below index 0 vanish
        if j < 0:
            return Fraction(0)
        return g[i] / (h[j] - h[k])

    def beta(n):
        return x[n] + ratio(n + 1, n, n + 1) - ratio(n, n - 1, n)

    def alpha(n):
        inner = ratio(n - 1, n - 2, n) - ratio(n, n - 1, n) + ratio(n + 1, n - 1, n + 1) + x[n] - x[n - 1]
        return ratio(n, n - 1, n) * inner

    return _build(N, alpha, beta)


# -- minus-one closed forms ------------------------------------------------


def _minus1_alpha(n, a1, a2, b1, b2, d1, d2):
    den = _nonzero((2 * n - 1) * a2 + 2 * a1, n, "(2n-1)a2 + 2a1")
    den = a2 * den * den
    if n % 2 == 0:
        num = n * ((n - 1) * a2 + 2 * a1) * (n * a2 * b2 + 2 * a1 * b2 - a2 * b1 + d2) * ((n - 1) * a2 * b2 + a2 * b1 - d2)
        return -num / den
    w1 = a2 * b2 * n * n + ((b1 - b2) * a2 + 2 * a1 * b2 + d2) * n + 2 * (b1 - b2) * a1 + 2 * d1
    w2 = (
        a2 * a2 * b2 * n * n
        + (-(b1 + b2) * a2 * a2 + (2 * a1 * b2 - d2) * a2) * n
        + a2 * a2 * b1
        + (2 * d1 + d2 - 2 * a1 * b2) * a2
        - 2 * a1 * d2
    )
    return -w1 * w2 / den


def _minus1_beta(n, a1, a2, b1, b2, d1, d2):
    if n == 0:
        return -(2 * d1 + d2) / _nonzero(2 * a1 + a2, 0, "2a1 + a2")
    den = _nonzero((2 * n - 1) * a2 + 2 * a1, n, "(2n-1)a2 + 2a1") * _nonzero(
        (2 * n + 1) * a2 + 2 * a1, n, "(2n+1)a2 + 2a1"
    )
    lead = a2 * (2 * a1 * b2 + a2 * (b2 - 2 * b1) - 4 * d1)
    if n % 2 == 0:
        return (lead * n - (2 * d1 + d2) * (2 * a1 - a2)) / den
    rest = -4 * a1 * a1 * b2 + ((4 * b1 - 2 * b2) * a2 + 4 * d1 - 2 * d2) * a1 + (2 * d1 + d2) * a2
    return (rest - lead * n) / den


def coeffs_minus1(p: ParamSet, N: int) -> RecurrencePair:
    """Closed-form coefficients on the minus-one lattice.

    A nonzero b0 translates the nodes; with e held fixed it also moves g by
    ``b0*(h_k - h_0)``, which is the same as using ``d1 + b0*a1`` and
    ``d2 + b0*a2`` in the b0-free formulas and adding b0 to every beta.
    """
    if p.kind.tag != MINUS_ONE_TAG:
        raise InvalidParams("coeffs_minus1 needs the minus-one lattice")
    c = p.b0
    args = (p.a1, p.a2, p.b1, p.b2, p.d1 + c * p.a1, p.d2 + c * p.a2)
    return _build(N, lambda n: _minus1_alpha(n, *args), lambda n: c + _minus1_beta(n, *args))


# -- (r, s, t1, t2) family -------------------------------------------------


def rst_params(r, s, t1, t2, b2, a2=1) -> ParamSet:
    r, s, t1, t2, b2, a2 = map(as_scalar, (r, s, t1, t2, b2, a2))
    return ParamSet(
        a1=(s + _HALF) * a2,
        a2=a2,
        b1=(r + _HALF) * b2,
        b2=b2,
        d1=(t1 / 2 + Fraction(1, 4)) * a2 * b2,
        d2=(t2 - _HALF) * a2 * b2,
    )


def _s_denominators(n: int, s: Scalar) -> tuple[Scalar, Scalar]:
    return _nonzero(n + s, n, "n + s"), _nonzero(n + 1 + s, n, "n + 1 + s")


def coeffs_rst(r, s, t1, t2, b2, N: int) -> RecurrencePair:
    r, s, t1, t2, b2 = map(as_scalar, (r, s, t1, t2, b2))
    if b2 == 0:
        raise InvalidParams("the (r, s, t1, t2) form needs b2 != 0")

    def alpha(n):
        ns = _nonzero(n + s, n, "n + s")
        if n % 2 == 0:
            num = n * (n + 2 * s) * (n + 2 * s - r + t2) * (n + r - t2)
        else:
            num = (n * n + (r + 2 * s + t2) * n + (2 * r - 1) * s + r + t1) * (
                n * n + (2 * s - r - t2) * n - (2 * t2 + 1) * s + r + t1
            )
        return -b2 * b2 * num / (4 * ns * ns)

    def beta(n):
        if n == 0:
            return -b2 * (t1 + t2) / (2 * _nonzero(1 + s, 0, "n + 1 + s"))
        ns, ns1 = _s_denominators(n, s)
        if n % 2 == 0:
            return -b2 * ((r - s + t1) * n + s * (t1 + t2)) / (2 * ns * ns1)
        return b2 * ((r - s + t1) * n - 2 * s * s + (2 * r + t1 - t2 - 1) * s + r + t1) / (2 * ns * ns1)

    return _build(N, alpha, beta)


# -- (p, q, r, s) factorized family ----------------------------------------


def pq_to_rst(p, q, r, s) -> tuple[Scalar, Scalar, Scalar, Scalar]:
    """(r, s, t1, t2) for which p and q are the odd-n alpha numerator roots."""
    p, q, r, s = map(as_scalar, (p, q, r, s))
    return r, s, p * q + s - r * (1 + 2 * s), -(p + q + r + 2 * s)


def coeffs_pq(p, q, r, s, b2, N: int) -> RecurrencePair:
    p, q, r, s, b2 = map(as_scalar, (p, q, r, s, b2))
    if b2 == 0:
        raise InvalidParams("the (p, q, r, s) form needs b2 != 0")
    pq = p * q

    def alpha(n):
        ns = _nonzero(n + s, n, "n + s")
        if n % 2 == 0:
            num = n * (n + 2 * s) * (n - p - q - 2 * r) * (n + p + q + 2 * r + 2 * s)
        else:
            num = (n - p) * (n - q) * (n + p + 2 * s) * (n + q + 2 * s)
        return -b2 * b2 * num / (4 * ns * ns)

    def beta(n):
        if n == 0:
            return -b2 * (pq - p - q - 2 * r - s * (1 + 2 * r)) / (2 * _nonzero(1 + s, 0, "n + 1 + s"))
        ns, ns1 = _s_denominators(n, s)
        if n % 2 == 0:
            return -b2 * ((pq - 2 * r * s) * n - s * s * (1 + 2 * r) + s * (pq - p - q - 2 * r)) / (2 * ns * ns1)
        return b2 * ((pq - 2 * r * s) * n + pq + s * s * (1 - 2 * r) + s * (pq + p + q)) / (2 * ns * ns1)

    return _build(N, alpha, beta)


# -- b2 = 0 family ---------------------------------------------------------


def b2zero_params(b1, s, t1, t2, a2=1) -> ParamSet:
    b1, s, t1, t2, a2 = map(as_scalar, (b1, s, t1, t2, a2))
    return ParamSet(a1=(s + _HALF) * a2, a2=a2, b1=b1, b2=0, d1=t1 * a2 / 2, d2=t2 * a2)


def coeffs_b2zero(b1, s, t1, t2, N: int) -> RecurrencePair:
    b1, s, t1, t2 = map(as_scalar, (b1, s, t1, t2))

    def alpha(n):
        ns = _nonzero(n + s, n, "n + s")
        if n % 2 == 0:
            num = (b1 - t2) ** 2 * n * (n + 2 * s)
        else:
            num = ((b1 + t2) * n + 2 * b1 * s + b1 + t1) * ((b1 + t2) * n + 2 * s * t2 - b1 - t1)
        return num / (4 * ns * ns)

    def beta(n):
        if n == 0:
            return -(t1 + t2) / (2 * _nonzero(1 + s, 0, "n + 1 + s"))
        ns, ns1 = _s_denominators(n, s)
        if n % 2 == 0:
            return -((b1 + t1) * n + s * (t1 + t2)) / (2 * ns * ns1)
        return ((b1 + t1) * (n + 1) + s * (2 * b1 + t1 - t2)) / (2 * ns * ns1)

    return _build(N, alpha, beta)


# -- continuous family -----------------------------------------------------


def continuous_to_rst(y1, y2, w1, w2) -> tuple[Scalar, Scalar, Scalar, Scalar, Scalar]:
    """(r, s, t1, t2, b2) over Q(i) with b2 = i."""
    y1, y2, w1, w2 = map(as_scalar, (y1, y2, w1, w2))
    y = y1 + I * y2
    w = w1 + I * w2
    r = (y - w) / 2
    t2 = -(y + w) / 2
    t1 = (conjugate(y) + w) / 2 - (y1 * y2 - w1 * w2) * I
    return r, y1, t1, t2, I


def coeffs_continuous(y1, y2, w1, w2, N: int) -> RecurrencePair:
    y1, y2, w1, w2 = map(as_scalar, (y1, y2, w1, w2))
    if not all(is_real(v) for v in (y1, y2, w1, w2)):
        raise InvalidParams("continuous family parameters must be rational")
    c = w1 * w2 - y1 * y2

    def alpha(n):
        ny = _nonzero(n + y1, n, "n + y1")
        if n % 2 == 0:
            num = n * (n + 2 * y1) * (ny * ny + y2 * y2)
        else:
            num = (ny + w1) * (ny - w1) * (ny * ny + w2 * w2)
        return num / (4 * ny * ny)

    def beta(n):
        if n == 0:
            return (c - y2) / (2 * _nonzero(1 + y1, 0, "n + 1 + y1"))
        ny = _nonzero(n + y1, n, "n + y1")
        ny1 = _nonzero(n + 1 + y1, n, "n + 1 + y1")
        if n % 2 == 0:
            return (c * n + y1 * c - y1 * y2) / (2 * ny * ny1)
        return (-c * n - y1 * c - w1 * w2) / (2 * ny * ny1)

    return _build(N, alpha, beta)


# -- diagnostics -----------------------------------------------------------


@dataclass(frozen=True)
class PositivityReport:
    nonpositive: tuple  # indices n with alpha_n <= 0
    beta_real: bool

    @property
    def positive(self) -> bool:
        return not self.nonpositive and self.beta_real


def positivity_scan(rp: RecurrencePair) -> PositivityReport:
    if not all(is_real(a) for a in rp.alpha):
        raise InvalidParams("positivity is only defined for rational alpha")
    bad = tuple(n for n in range(1, rp.N + 1) if rp.a(n) <= 0)
    return PositivityReport(bad, all(is_real(b) for b in rp.beta))

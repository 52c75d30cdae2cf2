"""Lattice sequences x_k, h_k, e_k, g_k.

All three lattices solve ``s[k+3] = z*(s[k+2] - s[k+1]) + s[k]``.  The
characteristic roots are 1, q and 1/q with ``z = 1 + q + 1/q``; q = -1 is a
double root (z = -1) and q = 1 a triple root (z = 3).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import EigenvalueCollision, InvalidParams
from .field import Scalar, as_scalar

MINUS_ONE_TAG = "minus-one"
GENERAL_Q_TAG = "general-q"
Q_ONE_TAG = "q-one"


@dataclass(frozen=True)
class LatticeKind:
    tag: str
    q: Fraction | None = None

    def __post_init__(self):
        if self.tag == GENERAL_Q_TAG:
            if self.q is None:
                raise InvalidParams("general-q lattice needs q")
            q = as_scalar(self.q)
            if q in (0, 1, -1):
                raise InvalidParams(f"general-q lattice needs q outside {{0, 1, -1}}, got {q}")
            object.__setattr__(self, "q", q)
        elif self.tag in (MINUS_ONE_TAG, Q_ONE_TAG):
            if self.q is not None:
                raise InvalidParams(f"{self.tag} lattice takes no q")
        else:
            raise InvalidParams(f"unknown lattice kind {self.tag!r}")

    @property
    def z(self) -> Scalar:
        if self.tag == MINUS_ONE_TAG:
            return Fraction(-1)
        if self.tag == Q_ONE_TAG:
            return Fraction(3)
        return 1 + self.q + 1 / self.q

    def __str__(self):
        return f"general-q({self.q})" if self.tag == GENERAL_Q_TAG else self.tag


MINUS_ONE = LatticeKind(MINUS_ONE_TAG)
Q_ONE = LatticeKind(Q_ONE_TAG)


def general_q(q) -> LatticeKind:
    return LatticeKind(GENERAL_Q_TAG, as_scalar(q))


PARAM_NAMES = ("a1", "a2", "b0", "b1", "b2", "d1", "d2")


@dataclass(frozen=True)
class ParamSet:
    """The seven lattice coefficients; a0 is fixed to 0 and d0 is derived."""

    a1: Scalar = Fraction(0)
    a2: Scalar = Fraction(1)
    b0: Scalar = Fraction(0)
    b1: Scalar = Fraction(0)
    b2: Scalar = Fraction(0)
    d1: Scalar = Fraction(0)
    d2: Scalar = Fraction(0)
    kind: LatticeKind = MINUS_ONE

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.kind.tag == MINUS_ONE_TAG and self.a2 == 0:
            raise InvalidParams("a2 must be nonzero on the minus-one lattice")

    @property
    def d0(self) -> Scalar:
        if self.kind.tag == GENERAL_Q_TAG:
            return -self.d1 - self.d2
        if self.kind.tag == MINUS_ONE_TAG:
            return -self.d1
        return Fraction(0)

    def values(self) -> dict[str, Scalar]:
        return {name: getattr(self, name) for name in PARAM_NAMES}

    def with_(self, **changes) -> "ParamSet":
        return replace(self, **changes)


@dataclass(frozen=True)
class LatticeSeqs:
    x: tuple
    h: tuple
    e: tuple
    g: tuple
    kind: LatticeKind
    degenerate: tuple = field(default=())  # indices k >= 1 with g_k = 0

    @property
    def N(self) -> int:
        return len(self.x) - 1


def basic_solutions(z: Scalar, N: int) -> tuple[list[Scalar], list[Scalar], list[Scalar]]:
    """The three solutions with initial rows (1,0,0), (0,1,0), (0,0,1), indices 0..N."""
    if N < 3:
        raise InvalidParams("basic solutions need N >= 3")
    z = as_scalar(z)
    out = []
    for start in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        s = [Fraction(v) for v in start]
        for k in range(N - 2):
            s.append(z * (s[k + 2] - s[k + 1]) + s[k])
        out.append(s)
    return out[0], out[1], out[2]


def _sequences(p: ParamSet, N: int):
    kind = p.kind
    if kind.tag == MINUS_ONE_TAG:
        sign = [Fraction(1 if k % 2 == 0 else -1) for k in range(N + 1)]
        x = [p.b0 + sign[k] * (p.b1 + p.b2 * k) for k in range(N + 1)]
        h = [sign[k] * (p.a1 + p.a2 * k) for k in range(N + 1)]
        e = [-p.d1 + sign[k] * (p.d1 + p.d2 * k) for k in range(N + 1)]
    elif kind.tag == GENERAL_Q_TAG:
        q = kind.q
        up = [q**k for k in range(N + 1)]
        x = [p.b0 + p.b1 * u + p.b2 / u for u in up]
        h = [p.a1 * u + p.a2 / u for u in up]
        e = [p.d0 + p.d1 * u + p.d2 / u for u in up]
    else:
        x = [p.b0 + p.b1 * k + p.b2 * k * k for k in range(N + 1)]
        h = [p.a1 * k + p.a2 * k * k for k in range(N + 1)]
        e = [p.d1 * k + p.d2 * k * k for k in range(N + 1)]
    return x, h, e


def build_lattice(p: ParamSet, N: int) -> LatticeSeqs:
    """Sequences up to index N; raises EigenvalueCollision if two h_k agree."""
    if N < 1:
        raise InvalidParams("order must be at least 1")
    x, h, e = _sequences(p, N)
    seen: dict = {}
    for k, value in enumerate(h):
        if value in seen:
            raise EigenvalueCollision(seen[value], k, value)
        seen[value] = k
    g = [Fraction(0)] + [x[k - 1] * (h[k] - h[0]) + e[k] for k in range(1, N + 1)]
    degenerate = tuple(k for k in range(1, N + 1) if g[k] == 0)
    return LatticeSeqs(tuple(x), tuple(h), tuple(e), tuple(g), p.kind, degenerate)


def g_closed_form_minus1(p: ParamSet, k: int) -> Scalar:
    """Closed form of g_k on the minus-one lattice.

    The b0-free expressions get ``b0*(h_k - h_0)`` added back, so any b0 is
    accepted.
    """
    if p.kind.tag != MINUS_ONE_TAG:
        raise InvalidParams("closed form for g_k is stated on the minus-one lattice only")
    a1, a2, b1, b2, d1, d2 = p.a1, p.a2, p.b1, p.b2, p.d1, p.d2
    if k % 2 == 0:
        g = -k * ((k - 1) * a2 * b2 - d2 + a2 * b1)
        hk = a1 + a2 * k
    else:
        g = -(a2 * b2 * k * k + ((b1 - b2) * a2 + 2 * a1 * b2 + d2) * k + 2 * (b1 - b2) * a1 + 2 * d1)
        hk = -(a1 + a2 * k)
    if k == 0:
        return Fraction(0)
    return g + p.b0 * (hk - a1)

"""Connection matrix between the Newtonian basis and the eigenpolynomials.

Row n of C holds the coefficients of the monic eigenpolynomial u_n over the
Newtonian basis v_k(t) = (t - x_0)...(t - x_{k-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .banded import BandedMatrix
from .errors import DegreeOverflow, InvalidParams
from .field import Scalar
from .seqs import LatticeSeqs

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class ConnectionMatrix:
    """Unit lower-triangular matrix stored as ragged rows ``c[n][0..n]``."""

    rows: tuple

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]) -> Scalar:
        n, k = nk
        if k > n:
            return _ZERO
        return self.rows[n][k]

    def row(self, n: int) -> tuple:
        return self.rows[n]

    def to_banded(self) -> BandedMatrix:
        size = len(self.rows)
        return BandedMatrix(size, {-d: [self.rows[k + d][k] for k in range(size - d)] for d in range(size)})

    def dense(self) -> list[list[Scalar]]:
        size = len(self.rows)
        return [[self[n, k] for k in range(size)] for n in range(size)]

    @classmethod
    def from_banded(cls, m: BandedMatrix) -> "ConnectionMatrix":
        return cls(tuple(tuple(m[n, k] for k in range(n + 1)) for n in range(m.size)))


@dataclass(frozen=True)
class NewtonPoly:
    coeffs: tuple
    nodes: tuple

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1


def _check_order(seqs: LatticeSeqs, N: int):
    if N > seqs.N:
        raise InvalidParams(f"sequences only reach order {seqs.N}, asked for {N}")


def build_C(seqs: LatticeSeqs, N: int) -> ConnectionMatrix:
    _check_order(seqs, N)
    h, g = seqs.h, seqs.g
    rows = []
    for n in range(N + 1):
        row = [_ZERO] * (n + 1)
        row[n] = _ONE
        for k in range(n - 1, -1, -1):
            row[k] = row[k + 1] * g[k + 1] / (h[n] - h[k])
        rows.append(tuple(row))
    return ConnectionMatrix(tuple(rows))


def build_C_inverse(seqs: LatticeSeqs, N: int) -> ConnectionMatrix:
    _check_order(seqs, N)
    h, g = seqs.h, seqs.g
    rows = []
    for n in range(N + 1):
        row = [_ZERO] * (n + 1)
        row[n] = _ONE
        for k in range(n):
            acc = _ONE
            for j in range(k + 1, n + 1):
                acc = acc * g[j] / (h[k] - h[j])
            row[k] = acc
        rows.append(tuple(row))
    return ConnectionMatrix(tuple(rows))


def moments(seqs: LatticeSeqs, N: int) -> list[Scalar]:
    """m_n = prod_{k=1..n} g_k / (h_0 - h_k)."""
    _check_order(seqs, N)
    h, g = seqs.h, seqs.g
    out = []
    for n in range(N + 1):
        acc = _ONE
        for k in range(1, n + 1):
            acc = acc * g[k] / (h[0] - h[k])
        out.append(acc)
    return out


def moments_recursive(seqs: LatticeSeqs, N: int) -> list[Scalar]:
    """m_0 = 1, m_{n+1} = m_n * g_{n+1} / (h_0 - h_{n+1})."""
    _check_order(seqs, N)
    h, g = seqs.h, seqs.g
    out = [_ONE]
    for n in range(N):
        out.append(out[-1] * g[n + 1] / (h[0] - h[n + 1]))
    return out


def operator_matrices(seqs: LatticeSeqs, N: int) -> tuple[BandedMatrix, BandedMatrix]:
    """(X + F, H + S G): multiplication by t and the operator D in the Newtonian basis."""
    _check_order(seqs, N)
    size = N + 1
    xf = BandedMatrix(size, {0: list(seqs.x[:size]), 1: [_ONE] * N})
    hsg = BandedMatrix(size, {0: list(seqs.h[:size]), -1: list(seqs.g[1:size])})
    return xf, hsg


def newton_row(C: ConnectionMatrix, seqs: LatticeSeqs, n: int) -> NewtonPoly:
    return NewtonPoly(tuple(C.row(n)), tuple(seqs.x))


def apply_D(seqs: LatticeSeqs, p: NewtonPoly) -> NewtonPoly:
    """D v_k = h_k v_k + g_k v_{k-1}."""
    c = list(p.coeffs)
    if len(c) > seqs.N + 1:
        raise DegreeOverflow(f"degree {len(c) - 1} exceeds the lattice order {seqs.N}")
    h, g = seqs.h, seqs.g
    out = [h[k] * c[k] + (g[k + 1] * c[k + 1] if k + 1 < len(c) else _ZERO) for k in range(len(c))]
    return NewtonPoly(tuple(out), p.nodes)


def eval_newton(p: NewtonPoly, t: Scalar) -> Scalar:
    if not p.coeffs:
        return _ZERO
    acc: Scalar = p.coeffs[-1]
    for k in range(len(p.coeffs) - 2, -1, -1):
        acc = p.coeffs[k] + (t - p.nodes[k]) * acc
    return acc


def to_monomial(p: NewtonPoly) -> list[Scalar]:
    """Monomial coefficients, constant term first."""
    coeffs: Sequence[Scalar] = p.coeffs
    if not coeffs:
        return []
    out: list[Scalar] = [coeffs[-1]]
    for k in range(len(coeffs) - 2, -1, -1):
        # out <- out * (t - x_k) + c_k
        xk = p.nodes[k]
        shifted = [_ZERO] + out
        for i in range(len(out)):
            shifted[i] -= xk * out[i]
        shifted[0] += coeffs[k]
        out = shifted
    return out

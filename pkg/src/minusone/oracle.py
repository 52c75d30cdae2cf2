"""Brute-force verifiers.

Nothing here reuses the formula code of the modules it checks: polynomials
are expanded from their linear factors, matrix products are dense triple
loops, and Newton coefficients come from divided-difference tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .banded import BandedMatrix
from .errors import NodeCollision, ResidualNonzero
from .field import Scalar
from .recurrence import RecurrencePair

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class DensePoly:
    """Monomial coefficients, constant term first, no trailing zeros."""

    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def __add__(self, other: "DensePoly") -> "DensePoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return DensePoly(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return self + other.scale(-1)

    def scale(self, c: Scalar) -> "DensePoly":
        return DensePoly(tuple(c * v for v in self.coeffs))

    def times_linear(self, root: Scalar) -> "DensePoly":
        """self * (t - root)."""
        out = [_ZERO] * (len(self.coeffs) + 1)
        for k, v in enumerate(self.coeffs):
            out[k + 1] += v
            out[k] -= root * v
        return DensePoly(tuple(out))

    def __call__(self, t: Scalar) -> Scalar:
        acc: Scalar = _ZERO
        for v in reversed(self.coeffs):
            acc = acc * t + v
        return acc


def newton_to_dense(coeffs: Sequence[Scalar], nodes: Sequence[Scalar]) -> DensePoly:
    """sum_k coeffs[k] * (t - x_0)...(t - x_{k-1}), expanded factor by factor."""
    total = DensePoly(())
    basis = DensePoly((_ONE,))
    for k, c in enumerate(coeffs):
        total = total + basis.scale(c)
        basis = basis.times_linear(nodes[k])
    return total


def extract_recurrence(polys: Sequence[DensePoly]) -> RecurrencePair:
    """Read (alpha, beta) off monic u_0..u_N; N steps give alpha_1..alpha_{N-1}, beta_0..beta_{N-1}."""
    if len(polys) < 2:
        raise ValueError("need at least u_0 and u_1")
    for n, u in enumerate(polys):
        if u.degree != n or u.coeff(n) != 1:
            raise ValueError(f"polynomial {n} is not monic of degree {n}")
    alpha, beta = [], []
    for n in range(len(polys) - 1):
        r = polys[n + 1] - DensePoly((_ZERO,) + polys[n].coeffs)
        b = -r.coeff(n)
        r = r + polys[n].scale(b)
        if n >= 1:
            a = -r.coeff(n - 1)
            r = r + polys[n - 1].scale(a)
            alpha.append(a)
        beta.append(b)
        if r.coeffs:
            raise ResidualNonzero(n)
    return RecurrencePair(tuple(alpha), tuple(beta))


def polys_from_recurrence(rp: RecurrencePair, N: int) -> list[DensePoly]:
    """u_0..u_N from u_{n+1} = (t - beta_n) u_n - alpha_n u_{n-1}."""
    out = [DensePoly((_ONE,))]
    for n in range(N):
        nxt = out[n].times_linear(rp.beta[n])
        if n >= 1:
            nxt = nxt - out[n - 1].scale(rp.alpha[n - 1])
        out.append(nxt)
    return out


def dense_product(A: BandedMatrix, B: BandedMatrix) -> BandedMatrix:
    """Triple-loop product; the exact window drops by the bandwidth overlap."""
    if A.size != B.size:
        raise ValueError("size mismatch")
    n = A.size
    a = [[A[i, j] for j in range(n)] for i in range(n)]
    b = [[B[i, j] for j in range(n)] for i in range(n)]
    rows = []
    for i in range(n):
        rows.append([sum((a[i][k] * b[k][j] for k in range(n)), _ZERO) for j in range(n)])
    upper_a = max([j - i for i in range(n) for j in range(n) if a[i][j] != 0 and j > i], default=0)
    lower_b = max([i - j for i in range(n) for j in range(n) if b[i][j] != 0 and i > j], default=0)
    return BandedMatrix.from_rows(rows, min(A.exact, B.exact) - min(upper_a, lower_b))


@dataclass(frozen=True)
class DividedDifferenceReport:
    n: int
    table: tuple  # [x_0..x_k] u_n for k = 0..n
    c_row: tuple
    matches: bool


def divided_differences(f: DensePoly, nodes: Sequence[Scalar]) -> list[Scalar]:
    """[x_0], [x_0, x_1], ..., [x_0..x_m] of f."""
    m = len(nodes)
    for j in range(m):
        for k in range(j + 1, m):
            if nodes[j] == nodes[k]:
                raise NodeCollision(j, k)
    column = [f(x) for x in nodes]
    out = [column[0]]
    for order in range(1, m):
        column = [(column[j + 1] - column[j]) / (nodes[j + order] - nodes[j]) for j in range(m - order)]
        out.append(column[0])
    return out


def divided_difference_check(seqs, n: int, rp: RecurrencePair, C) -> DividedDifferenceReport:
    """Newton coefficients of u_n (built from rp) versus row n of C."""
    u = polys_from_recurrence(rp, n)[n]
    table = tuple(divided_differences(u, seqs.x[: n + 1]))
    row = tuple(C.row(n))
    return DividedDifferenceReport(n, table, row, table == row)

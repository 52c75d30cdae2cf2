"""Square truncations of infinite banded matrices.

A :class:`BandedMatrix` stores its nonzero diagonals only and remembers how
much of its leading block is unaffected by truncation (``exact``).  Products
propagate that window: entry ``(i, j)`` of a truncated ``A @ B`` misses the
terms ``A[i, k] B[k, j]`` with ``k >= size``, which vanish when
``i + A.upper < size`` or ``j + B.lower < size``.  Hence the leading block of
the product is exact up to ``min(A.exact, B.exact) - min(A.upper, B.lower)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .field import Scalar, as_scalar

_ZERO = Fraction(0)


class BandedMatrix:
    def __init__(self, size: int, diagonals: Mapping[int, Sequence[Scalar]], exact: int | None = None):
        if size < 0:
            raise ValueError("size must be non-negative")
        self.size = size
        self._diags: dict[int, list[Scalar]] = {}
        for d, values in diagonals.items():
            if abs(d) >= max(size, 1):
                continue
            values = list(values)
            if len(values) != size - abs(d):
                raise ValueError(f"diagonal {d} needs {size - abs(d)} entries, got {len(values)}")
            if any(v != 0 for v in values):
                self._diags[d] = values
        self.exact = size if exact is None else max(0, min(exact, size))

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, size: int, scale: Scalar = 1) -> "BandedMatrix":
        return cls(size, {0: [as_scalar(scale)] * size})

    @classmethod
    def diag(cls, values: Sequence[Scalar]) -> "BandedMatrix":
        return cls(len(values), {0: list(values)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], exact: int | None = None) -> "BandedMatrix":
        size = len(rows)
        diags: dict[int, list[Scalar]] = {}
        for i, row in enumerate(rows):
            for j in range(min(len(row), size)):
                v = row[j]
                if v != 0:
                    d = j - i
                    if d not in diags:
                        diags[d] = [_ZERO] * (size - abs(d))
                    diags[d][min(i, j)] = v
        return cls(size, diags, exact)

    # -- structure ---------------------------------------------------------

    @property
    def order(self) -> int:
        return self.size - 1

    @property
    def lower(self) -> int:
        return max([-d for d in self._diags if d < 0], default=0)

    @property
    def upper(self) -> int:
        return max([d for d in self._diags if d > 0], default=0)

    def diagonal(self, d: int = 0) -> list[Scalar]:
        if d in self._diags:
            return list(self._diags[d])
        return [_ZERO] * max(self.size - abs(d), 0)

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        if not (0 <= i < self.size and 0 <= j < self.size):
            raise IndexError(f"({i}, {j}) outside a {self.size}x{self.size} matrix")
        values = self._diags.get(j - i)
        if values is None:
            return _ZERO
        return values[min(i, j)]

    def rows(self, limit: int | None = None) -> list[list[Scalar]]:
        m = self.size if limit is None else min(limit, self.size)
        return [[self[i, j] for j in range(m)] for i in range(m)]

    def truncate(self, size: int) -> "BandedMatrix":
        size = min(size, self.size)
        diags = {d: v[: size - abs(d)] for d, v in self._diags.items() if abs(d) < size}
        return BandedMatrix(size, diags, min(self.exact, size))

    # -- arithmetic --------------------------------------------------------

    def _combine(self, other: "BandedMatrix", sign: int) -> "BandedMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        diags = {d: list(v) for d, v in self._diags.items()}
        for d, values in other._diags.items():
            acc = diags.setdefault(d, [_ZERO] * (self.size - abs(d)))
            for t, v in enumerate(values):
                acc[t] = acc[t] + sign * v
        return BandedMatrix(self.size, diags, min(self.exact, other.exact))

    def __add__(self, other: "BandedMatrix") -> "BandedMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "BandedMatrix") -> "BandedMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "BandedMatrix":
        return self.scaled(-1)

    def scaled(self, c: Scalar) -> "BandedMatrix":
        return BandedMatrix(self.size, {d: [c * v for v in vals] for d, vals in self._diags.items()}, self.exact)

    def shifted(self, c: Scalar) -> "BandedMatrix":
        """``self + c*I``."""
        return self + BandedMatrix.identity(self.size, c)

    def __matmul__(self, other: "BandedMatrix") -> "BandedMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        n = self.size
        out: dict[int, list[Scalar]] = {}
        for da, va in self._diags.items():
            for db, vb in other._diags.items():
                d = da + db
                if abs(d) >= n:
                    continue
                acc = out.setdefault(d, [_ZERO] * (n - abs(d)))
                # row i of A hits column k = i + da, then column j = k + db
                lo = max(0, -da, -da - db, -d)
                hi = min(n, n - da, n - da - db, n - d)
                for i in range(lo, hi):
                    k = i + da
                    acc[min(i, i + d)] += va[min(i, k)] * vb[min(k, k + db)]
        exact = min(self.exact, other.exact) - min(self.upper, other.lower)
        return BandedMatrix(n, out, exact)

    # -- comparisons -------------------------------------------------------

    def agrees_with(self, other: "BandedMatrix", window: int | None = None) -> bool:
        """Entrywise equality on the leading block both sides guarantee."""
        w = min(self.exact, other.exact) if window is None else window
        return all(self[i, j] == other[i, j] for i in range(w) for j in range(w))

    def scalar_value(self, window: int | None = None) -> Scalar | None:
        """The ``c`` with ``self == c*I`` on the window, or None."""
        w = self.exact if window is None else window
        if w == 0:
            return None
        c = self[0, 0]
        for i in range(w):
            for j in range(w):
                if self[i, j] != (c if i == j else 0):
                    return None
        return c

    def __eq__(self, other):
        if not isinstance(other, BandedMatrix):
            return NotImplemented
        return self.size == other.size and self.rows() == other.rows()

    __hash__ = None

    def __repr__(self):
        return f"BandedMatrix(size={self.size}, lower={self.lower}, upper={self.upper}, exact={self.exact})"


def anticommutator(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    return a @ b + b @ a


def commutator(a: BandedMatrix, b: BandedMatrix) -> BandedMatrix:
    return a @ b - b @ a


def lower_bidiagonal(diag: Sequence[Scalar], sub: Sequence[Scalar]) -> BandedMatrix:
    return BandedMatrix(len(diag), {0: list(diag), -1: list(sub)})


def upper_bidiagonal(diag: Sequence[Scalar], sup: Sequence[Scalar] | Iterable[Scalar]) -> BandedMatrix:
    return BandedMatrix(len(diag), {0: list(diag), 1: list(sup)})

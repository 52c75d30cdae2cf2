"""Darboux transforms with a shift and the complementary families.

``L - w I = (I + Y S)(X + Z)`` with Y, Z diagonal; swapping the factors gives
``M = (X + Z)(I + Y S) + w I``.  Since the diagonal of M at row k needs
y_{k+1}, an order-N Jacobi matrix L yields an order N-1 matrix M.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Sequence

from .banded import BandedMatrix
from .connection import ConnectionMatrix
from .errors import DenominatorZero, FactorizationBreakdown, InvalidParams
from .field import Scalar, as_scalar
from .ratfit import RationalFit, fit_rational
from .recurrence import JacobiMatrix, coeffs_general, coeffs_minus1, jacobi
from .seqs import GENERAL_Q_TAG, MINUS_ONE, Q_ONE_TAG, ParamSet, build_lattice

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LUShift:
    """Shifted LU factors; ``y[0] = 0`` by convention."""

    w: Scalar
    y: tuple
    z: tuple

    @property
    def N(self) -> int:
        return len(self.z) - 1

    def lower(self) -> BandedMatrix:
        """I + Y S."""
        return BandedMatrix(len(self.z), {0: [_ONE] * len(self.z), -1: list(self.y[1:])})

    def upper(self) -> BandedMatrix:
        """X + Z."""
        return BandedMatrix(len(self.z), {0: list(self.z), 1: [_ONE] * (len(self.z) - 1)})

    def reassemble(self) -> BandedMatrix:
        return (self.lower() @ self.upper()).shifted(self.w)


def lu_shift(L: JacobiMatrix, w: Scalar) -> LUShift:
    w = as_scalar(w)
    beta, alpha = L.diag, L.sub
    y = [_ZERO]
    z = [beta[0] - w]
    for k in range(len(alpha)):
        if z[k] == 0:
            raise FactorizationBreakdown(k)
        y.append(alpha[k] / z[k])
        z.append(beta[k + 1] - w - y[k + 1])
    return LUShift(w, tuple(y), tuple(z))


def darboux_M(lu: LUShift) -> JacobiMatrix:
    """M_{k+1,k} = y_{k+1} z_{k+1}, M_{k,k} = y_{k+1} + z_k + w, for k < N."""
    n = lu.N
    diag = tuple(lu.y[k + 1] + lu.z[k] + lu.w for k in range(n))
    sub = tuple(lu.y[k + 1] * lu.z[k + 1] for k in range(n - 1))
    return JacobiMatrix(diag, sub)


# -- parameter vectors -----------------------------------------------------


@dataclass(frozen=True)
class ParamVector:
    a1: Scalar
    a2: Scalar
    b0: Scalar
    b1: Scalar
    b2: Scalar
    d1: Scalar
    d2: Scalar
    w: Scalar

    def __post_init__(self):
        for name in ("a1", "a2", "b0", "b1", "b2", "d1", "d2", "w"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        if self.a2 == 0:
            raise InvalidParams("a2 must be nonzero")

    @classmethod
    def from_params(cls, p: ParamSet, w: Scalar) -> "ParamVector":
        return cls(p.a1, p.a2, p.b0, p.b1, p.b2, p.d1, p.d2, w)

    @classmethod
    def in_gauge0(cls, p: ParamSet) -> "ParamVector":
        return cls.from_params(p, p.b0 + p.b1)

    @classmethod
    def in_gauge1(cls, p: ParamSet) -> "ParamVector":
        return cls.from_params(p, -p.d2 / p.a2)

    def params(self) -> ParamSet:
        return ParamSet(self.a1, self.a2, self.b0, self.b1, self.b2, self.d1, self.d2, MINUS_ONE)

    def in_P0(self) -> bool:
        return self.w == self.b0 + self.b1

    def in_P1(self) -> bool:
        return self.w == -self.d2 / self.a2

    def in_Pf(self) -> bool:
        return self.in_P0() and self.in_P1()


def gamma(p: ParamVector, N: int) -> JacobiMatrix:
    """The Darboux transform of L(p) with shift p.w, to order N."""
    L = jacobi(coeffs_minus1(p.params(), N + 1))
    return darboux_M(lu_shift(L, p.w))


# -- closed forms for the shift w = b0 + b1 --------------------------------


def _den(value: Scalar, index: int, what: str) -> Scalar:
    if value == 0:
        raise DenominatorZero(index, what)
    return value


def y_e(p: ParamVector, k: int) -> Scalar:
    if k == 0:
        return _ZERO
    den = _den(2 * p.a1 + (4 * k - 1) * p.a2, 2 * k, "2a1 + (4k-1)a2")
    return 2 * k * ((p.b0 - p.b1 + 2 * k * p.b2) * p.a2 + 2 * p.a1 * p.b2 + p.d2) / den


def y_o(p: ParamVector, k: int) -> Scalar:
    a1, a2, b0, b1, b2, d1, d2 = p.a1, p.a2, p.b0, p.b1, p.b2, p.d1, p.d2
    den = _den(2 * a1 + (4 * k + 1) * a2, 2 * k + 1, "2a1 + (4k+1)a2")
    num = a2 * a2 * ((2 * k + 1) * b2 - b0 - b1) * k + a2 * (2 * k * a1 * b2 - k * d2 + d1) - a1 * d2
    return 2 * num / (a2 * den)


def z_e(p: ParamVector, k: int) -> Scalar:
    a1, a2, b0, b1, b2, d1, d2 = p.a1, p.a2, p.b0, p.b1, p.b2, p.d1, p.d2
    den = _den(2 * a1 + (4 * k + 1) * a2, 2 * k, "2a1 + (4k+1)a2")
    return -((2 * k * b2 + b0 + b1) * (a2 * (2 * k + 1) + 2 * a1) + (2 * k + 1) * d2 + 2 * d1) / den


def z_o(p: ParamVector, k: int) -> Scalar:
    a1, a2, b0, b1, b2, d2 = p.a1, p.a2, p.b0, p.b1, p.b2, p.d2
    den = _den(2 * a1 + (4 * k + 3) * a2, 2 * k + 1, "2a1 + (4k+3)a2")
    return (2 * a1 + (2 * k + 1) * a2) * (a2 * (b0 - b1 - (2 * k + 1) * b2) + d2) / (a2 * den)


def _interleave(N: int, even: Callable[[int], Scalar], odd: Callable[[int], Scalar]) -> tuple:
    return tuple(even(k // 2) if k % 2 == 0 else odd(k // 2) for k in range(N + 1))


def c0_closed_forms(p: ParamVector, N: int) -> LUShift:
    """y_0..y_N and z_0..z_N for the shift w = b0 + b1."""
    if not p.in_P0():
        raise InvalidParams("closed forms need the shift w = b0 + b1")
    y = _interleave(N, lambda k: y_e(p, k), lambda k: y_o(p, k))
    z = _interleave(N, lambda k: z_e(p, k), lambda k: z_o(p, k))
    return LUShift(p.w, y, z)


def c0_tilde_closed_forms(p: ParamVector, N: int) -> LUShift:
    """y_0..y_N and z_0..z_N for the shift w = -d2/a2."""
    if not p.in_P1():
        raise InvalidParams("closed forms need the shift w = -d2/a2")
    y = _interleave(N, lambda k: y_e(p, k), lambda k: -z_e(p, k))
    z = _interleave(N, lambda k: -y_o(p, k), lambda k: z_o(p, k))
    return LUShift(p.w, y, z)


# -- duality between the two shifts ----------------------------------------


def _psi(p: ParamVector) -> ParamVector:
    a2, b0, b1, d2 = p.a2, p.b0, p.b1, p.d2
    return ParamVector(
        a1=p.a1,
        a2=a2,
        b0=b0,
        b1=-b0 - d2 / a2,
        b2=p.b2,
        d1=p.d1 + (b0 + b1) * a2 / 2 + d2 / 2,
        d2=-a2 * (b0 + b1),
        w=p.w,
    )


def psi_map(p: ParamVector) -> ParamVector:
    """Send a w = b0 + b1 vector to a w = -d2/a2 vector with the same M.

    The shift itself is carried over unchanged; in the image it equals
    -d2/a2 of the new parameters.
    """
    if not p.in_P0():
        raise InvalidParams("psi_map needs w = b0 + b1")
    return _psi(p)


def psi_inverse(p: ParamVector) -> ParamVector:
    if not p.in_P1():
        raise InvalidParams("psi_inverse needs w = -d2/a2")
    return _psi(p)


def j_matrix(p: ParamVector, N: int) -> JacobiMatrix:
    """Darboux matrix on the set where both shifts coincide."""
    if not p.in_Pf():
        raise InvalidParams("j_matrix needs (b0 + b1) a2 + d2 = 0 and w = b0 + b1")
    a1, a2, b0, b1, b2, d1 = p.a1, p.a2, p.b0, p.b1, p.b2, p.d1

    def common(k):
        return k * (2 * k + 1) * a2 * b2 + (b0 + b1 + 2 * k * b2) * a1 + d1

    def sub(i):
        # entry (i+1, i)
        if i % 2 == 0:
            k = i // 2
            den = _den(2 * a1 + (4 * k + 1) * a2, i, "2a1 + (4k+1)a2") * _den(
                2 * a1 + (4 * k + 3) * a2, i, "2a1 + (4k+3)a2"
            )
            return -2 * (2 * a1 + (2 * k + 1) * a2) * (2 * b1 + (2 * k + 1) * b2) * common(k) / den
        k = (i + 1) // 2
        den = _den(2 * a1 + (4 * k - 1) * a2, i, "2a1 + (4k-1)a2") * _den(
            2 * a1 + (4 * k + 1) * a2, i, "2a1 + (4k+1)a2"
        )
        return -8 * k * (k * a2 * b2 + a1 * b2 - a2 * b1) * common(k) / den

    diag = tuple(b0 + b1 if k % 2 == 0 else b0 - b1 + b2 for k in range(N + 1))
    return JacobiMatrix(diag, tuple(sub(i) for i in range(N)))


def complementary_C(C: ConnectionMatrix, lu: LUShift) -> ConnectionMatrix:
    """(I + Y S)^{-1} C by forward substitution: row_n = C_n - y_n row_{n-1}."""
    size = min(len(C.rows), len(lu.z))
    rows: list[tuple] = []
    for n in range(size):
        row = list(C.row(n))
        if n:
            prev = rows[-1]
            yn = lu.y[n]
            for k in range(n):
                row[k] = row[k] - yn * prev[k]
        rows.append(tuple(row))
    return ConnectionMatrix(tuple(rows))


# -- substitution identities on the general-q and q = 1 lattices ------------


@dataclass(frozen=True)
class SubstitutionReport:
    kind: str
    shift: Scalar
    window: int
    alpha_ok: tuple  # per k: substituted alpha_{k+1} == scale^2 * M_{k+1,k}
    beta_ok: tuple  # per k: substituted beta_k == scale * M_{k,k}

    @property
    def holds(self) -> bool:
        return all(self.alpha_ok) and all(self.beta_ok)


def general_q_darboux_check(p: ParamSet, N: int) -> SubstitutionReport:
    """Compare substituted recurrence coefficients against the Darboux matrix.

    For q != +-1 the shift is x_0 = b0 + b1 + b2 and the substitution is
    (q a1, a2, q b0, q^2 b1, b2, q^2 d1, q d2) with scale q; for q = 1 the
    shift is b0 and the substitution is
    (a1 + a2, a2, b0 + b1 + b2, b1 + 2 b2, b2, d1 + d2, d2) with scale 1.
    """
    if p.kind.tag == GENERAL_Q_TAG:
        q = p.kind.q
        w = p.b0 + p.b1 + p.b2
        image = replace(p, a1=q * p.a1, b0=q * p.b0, b1=q * q * p.b1, d1=q * q * p.d1, d2=q * p.d2)
        scale = q
    elif p.kind.tag == Q_ONE_TAG:
        w = p.b0
        image = replace(p, a1=p.a1 + p.a2, b0=p.b0 + p.b1 + p.b2, b1=p.b1 + 2 * p.b2, d1=p.d1 + p.d2)
        scale = _ONE
    else:
        raise InvalidParams("substitution identity applies to the general-q and q-one lattices")
    L = jacobi(coeffs_general(build_lattice(p, N + 2), N + 1))
    try:
        M = darboux_M(lu_shift(L, w))
    except FactorizationBreakdown as exc:
        raise FactorizationBreakdown(exc.index, f"shift x0 = {w} on {p.kind}") from None
    sub = coeffs_general(build_lattice(image, N + 1), N)
    alpha_ok = tuple(sub.alpha[k] == scale * scale * M.sub[k] for k in range(N))
    beta_ok = tuple(sub.beta[k] == scale * M.diag[k] for k in range(N + 1))
    return SubstitutionReport(str(p.kind), w, N + 1, alpha_ok, beta_ok)


# -- degree probes ----------------------------------------------------------


@dataclass(frozen=True)
class DegreeProfile:
    """Rational fits of M entries as functions of the half-index k."""

    sub_even: RationalFit  # M_{2k+1,2k}
    sub_odd: RationalFit  # M_{2k+2,2k+1}
    diag_even: RationalFit  # M_{2k,2k}
    diag_odd: RationalFit  # M_{2k+1,2k+1}

    def degrees(self) -> dict[str, tuple[int, int]]:
        return {
            "sub_even": self.sub_even.degrees,
            "sub_odd": self.sub_odd.degrees,
            "diag_even": self.diag_even.degrees,
            "diag_odd": self.diag_odd.degrees,
        }


def _parity_fit(values: Sequence[Scalar], parity: int) -> RationalFit:
    picked = list(values[parity::2])
    return fit_rational(range(len(picked)), picked)


def degree_profile(M: JacobiMatrix) -> DegreeProfile:
    """Fit each parity family of M's entries as a rational function of k."""
    return DegreeProfile(
        _parity_fit(M.sub, 0),
        _parity_fit(M.sub, 1),
        _parity_fit(M.diag, 0),
        _parity_fit(M.diag, 1),
    )


def special_family(r: Scalar, w: Scalar, a2: Scalar = 1) -> ParamVector:
    """b0 = 0, b1 = -w, b2 = 0, d1 = 0, d2 = w a2, a1 = (r/2 - 1) a2, shift w."""
    r, w, a2 = as_scalar(r), as_scalar(w), as_scalar(a2)
    return ParamVector(a1=(r / 2 - 1) * a2, a2=a2, b0=0, b1=-w, b2=0, d1=0, d2=w * a2, w=w)


def special_family_fit(k: int, rs: Sequence[Scalar], w: Scalar, a2: Scalar = 1) -> RationalFit:
    """M_{k+1,k} of the special family as a rational function of r."""
    values = [gamma(special_family(r, w, a2), k + 1).sub[k] for r in rs]
    return fit_rational(list(rs), values)

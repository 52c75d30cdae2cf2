"""Matrix realizations of the Bannai-Ito algebra.

Generators satisfy ``{G1, G2} = G3 + w3 I`` (the definition of G3) and
``{G2, G3} = G1 + w1 I``, ``{G3, G1} = G2 + w2 I``; the Casimir
``Q = G1^2 + G2^2 + G3^2`` is scalar.  The checks below measure the constants
from truncated products and compare them with closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .banded import BandedMatrix, anticommutator, commutator
from .connection import build_C, build_C_inverse, operator_matrices
from .field import Scalar, as_scalar
from .recurrence import coeffs_minus1, jacobi
from .seqs import ParamSet, build_lattice

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class StructureConstants:
    w1: Scalar
    w2: Scalar
    w3: Scalar
    casimir: Scalar


def structure_constants(a1, b1, d1, d2) -> StructureConstants:
    """Closed forms in the gauge a2 = b2 = 1, b0 = 0."""
    a1, b1, d1, d2 = map(as_scalar, (a1, b1, d1, d2))
    return StructureConstants(
        w1=2 * d1 + d2 * (1 - 2 * b1) - a1,
        w2=2 * d1 + d2 * (1 - 2 * a1) + a1 * (2 * b1 - 2 * a1) - a1,
        w3=a1 - b1 - 2 * d1 + _HALF,
        casimir=(a1 + d2) ** 2 + (a1 - b1) * (1 + a1 - b1) - 2 * d1 + Fraction(1, 4),
    )


def algebra_params(a1, b1, d1, d2) -> ParamSet:
    return ParamSet(a1=a1, a2=1, b0=0, b1=b1, b2=1, d1=d1, d2=d2)


@dataclass(frozen=True)
class GeneratorTriple:
    G1: BandedMatrix
    G2: BandedMatrix
    G3: BandedMatrix
    w1: Scalar
    w2: Scalar
    w3: Scalar
    casimir_claim: Scalar


def _triple(g1: BandedMatrix, g2: BandedMatrix, consts: StructureConstants) -> GeneratorTriple:
    g3 = anticommutator(g1, g2).shifted(-consts.w3)
    return GeneratorTriple(g1, g2, g3, consts.w1, consts.w2, consts.w3, consts.casimir)


def build_B_triple(a1, b1, d1, d2, N: int) -> GeneratorTriple:
    """B1 = D and B2 = multiplication by t, both in the Newtonian basis."""
    if N < 4:
        raise ValueError("order must be at least 4")
    seqs = build_lattice(algebra_params(a1, b1, d1, d2), N)
    xf, hsg = operator_matrices(seqs, N)
    return _triple(hsg, xf, structure_constants(a1, b1, d1, d2))


def build_L_triple(a1, b1, d1, d2, N: int) -> GeneratorTriple:
    """L1 = diag(h) and L2 = the Jacobi matrix, i.e. B1, B2 conjugated by C."""
    if N < 4:
        raise ValueError("order must be at least 4")
    p = algebra_params(a1, b1, d1, d2)
    seqs = build_lattice(p, N)
    l1 = BandedMatrix.diag(list(seqs.h))
    l2 = jacobi(coeffs_minus1(p, N)).to_banded()
    return _triple(l1, l2, structure_constants(a1, b1, d1, d2))


def conjugation_holds(a1, b1, d1, d2, N: int) -> tuple[bool, bool]:
    """(C B1 C^-1 == L1, C B2 C^-1 == L2) on the exact window."""
    B = build_B_triple(a1, b1, d1, d2, N)
    L = build_L_triple(a1, b1, d1, d2, N)
    seqs = build_lattice(algebra_params(a1, b1, d1, d2), N)
    C = build_C(seqs, N).to_banded()
    Ci = build_C_inverse(seqs, N).to_banded()
    return (C @ B.G1 @ Ci).agrees_with(L.G1), (C @ B.G2 @ Ci).agrees_with(L.G2)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    window: int
    measured: Scalar | None  # the c with lhs - rhs_without_constant = c I, if any
    claimed: Scalar

    @property
    def holds(self) -> bool:
        return self.measured is not None and self.measured == self.claimed

    @property
    def correction(self) -> Scalar | None:
        """Constant to add to the claimed value to make the relation hold."""
        if self.measured is None or self.holds:
            return None
        return self.measured - self.claimed


@dataclass(frozen=True)
class AlgebraReport:
    relations: tuple
    casimir_window: int
    casimir_measured: Scalar | None
    casimir_claim: Scalar
    casimir_commutes: bool

    @property
    def holds(self) -> bool:
        return (
            all(r.holds for r in self.relations)
            and self.casimir_measured is not None
            and self.casimir_measured == self.casimir_claim
            and self.casimir_commutes
        )

    @property
    def measured(self) -> dict:
        out = {r.name: r.measured for r in self.relations}
        out["casimir"] = self.casimir_measured
        return out


def _measure(name: str, lhs: BandedMatrix, rhs: BandedMatrix, claimed: Scalar) -> RelationCheck:
    diff = lhs - rhs
    return RelationCheck(name, diff.exact, diff.scalar_value(), claimed)


def verify_algebra(t: GeneratorTriple) -> AlgebraReport:
    g1, g2, g3 = t.G1, t.G2, t.G3
    relations = (
        _measure("w3", anticommutator(g1, g2), g3, t.w3),
        _measure("w1", anticommutator(g2, g3), g1, t.w1),
        _measure("w2", anticommutator(g3, g1), g2, t.w2),
    )
    Q = g1 @ g1 + g2 @ g2 + g3 @ g3
    commutes = all(
        (c := commutator(Q, g)).agrees_with(BandedMatrix(c.size, {}), c.exact) for g in (g1, g2, g3)
    )
    return AlgebraReport(relations, Q.exact, Q.scalar_value(), t.casimir_claim, commutes)

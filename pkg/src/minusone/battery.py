"""Seeded property battery behind the ``verify`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bialgebra, connection, darboux, oracle, recurrence
from .banded import BandedMatrix
from .errors import MinusOneError
from .seqs import Q_ONE, ParamSet, build_lattice, general_q

FAULTS = ("alpha",)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    draws: int
    failed_draw: int | None = None


def random_rational(rng: random.Random, span: int = 9, den: int = 7) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_params(rng: random.Random, **fixed) -> ParamSet:
    values = {name: random_rational(rng) for name in ("a1", "b0", "b1", "b2", "d1", "d2")}
    values["a2"] = Fraction(rng.randint(1, 9), rng.randint(1, 7)) * rng.choice((1, -1))
    values.update(fixed)
    return ParamSet(**values)


class _Battery:
    def __init__(self, seed: int, order: int, draws: int, fault: str | None):
        if fault is not None and fault not in FAULTS:
            raise ValueError(f"unknown fault {fault!r}")
        self.rng = random.Random(seed)
        self.N = order
        self.draws = draws
        self.fault = fault

    def minus1(self, p: ParamSet, N: int) -> recurrence.RecurrencePair:
        rp = recurrence.coeffs_minus1(p, N)
        if self.fault == "alpha" and rp.alpha:
            rp = recurrence.RecurrencePair((rp.alpha[0] + 1,) + rp.alpha[1:], rp.beta)
        return rp

    def run(self, name: str, make: Callable[[random.Random], object], check: Callable[[object], bool]) -> PropertyResult:
        done = attempts = 0
        while done < self.draws and attempts < 50 * self.draws:
            attempts += 1
            try:
                subject = make(self.rng)
                ok = check(subject)
            except MinusOneError:
                continue  # degenerate draw (collision, vanishing denominator, breakdown)
            if not ok:
                return PropertyResult(name, False, done + 1, done)
            done += 1
        return PropertyResult(name, done == self.draws, done)

    # -- properties --------------------------------------------------------

    def properties(self) -> list[PropertyResult]:
        N = self.N
        out = []

        def lattice(rng):
            p = random_params(rng)
            return p, build_lattice(p, N + 1)

        out.append(self.run(
            "minus1-matches-general", lattice,
            lambda ps: self.minus1(ps[0], N) == recurrence.coeffs_general(ps[1], N),
        ))

        def extract_ok(ps):
            p, seqs = ps
            C = connection.build_C(seqs, N + 1)
            polys = [oracle.newton_to_dense(C.row(n), seqs.x) for n in range(N + 2)]
            return oracle.extract_recurrence(polys) == self.minus1(p, N)

        out.append(self.run("oracle-extract-matches-minus1", lattice, extract_ok))

        def rst(rng):
            args = [random_rational(rng) for _ in range(4)] + [random_rational(rng) or Fraction(1)]
            return args, rng.randint(1, 5)

        out.append(self.run(
            "rst-substitution", rst,
            lambda s: recurrence.coeffs_rst(*s[0], N) == self.minus1(recurrence.rst_params(*s[0], a2=s[1]), N),
        ))

        def pq(rng):
            return [random_rational(rng) for _ in range(4)], random_rational(rng) or Fraction(1)

        out.append(self.run(
            "pq-substitution", pq,
            lambda s: recurrence.coeffs_pq(*s[0], s[1], N) == recurrence.coeffs_rst(*recurrence.pq_to_rst(*s[0]), s[1], N),
        ))
        out.append(self.run(
            "b2zero-substitution", rst,
            lambda s: recurrence.coeffs_b2zero(*s[0][:4], N)
            == self.minus1(recurrence.b2zero_params(*s[0][:4], a2=s[1]), N),
        ))
        out.append(self.run(
            "continuous-substitution", pq,
            lambda s: recurrence.coeffs_continuous(*s[0], N)
            == recurrence.coeffs_rst(*recurrence.continuous_to_rst(*s[0]), N),
        ))

        def structural(ps):
            p, seqs = ps
            C = connection.build_C(seqs, N).to_banded()
            Ci = connection.build_C_inverse(seqs, N).to_banded()
            xf, hsg = connection.operator_matrices(seqs, N)
            L = recurrence.jacobi(self.minus1(p, N)).to_banded()
            H = BandedMatrix.diag(list(seqs.h[: N + 1]))
            eigen = all(
                connection.apply_D(seqs, connection.newton_row(connection.build_C(seqs, N), seqs, n)).coeffs
                == tuple(seqs.h[n] * c for c in connection.build_C(seqs, N).row(n))
                for n in range(N + 1)
            )
            return (
                oracle.dense_product(L, C).agrees_with(oracle.dense_product(C, xf))
                and oracle.dense_product(C, hsg).agrees_with(oracle.dense_product(H, C))
                and oracle.dense_product(C, Ci).scalar_value() == 1
                and eigen
            )

        out.append(self.run("connection-identities", lattice, structural))

        def divided(ps):
            p, seqs = ps
            if len(set(seqs.x[: N + 1])) != N + 1:
                raise MinusOneError("repeated nodes")
            C = connection.build_C(seqs, N)
            rp = self.minus1(p, N)
            return all(oracle.divided_difference_check(seqs, n, rp, C).matches for n in range(N + 1))

        out.append(self.run("divided-differences-match-C", lattice, divided))

        def darboux_case(rng):
            p = random_params(rng)
            return p, darboux.ParamVector.in_gauge0(p), darboux.ParamVector.in_gauge1(p)

        def factorization(s):
            p, p0, p1 = s
            L = recurrence.jacobi(self.minus1(p, N))
            lu0, lu1 = darboux.lu_shift(L, p0.w), darboux.lu_shift(L, p1.w)
            Lb = L.to_banded()
            reassembled = oracle.dense_product(lu0.lower(), lu0.upper()).shifted(lu0.w)
            return (
                reassembled.agrees_with(Lb)
                and lu0 == darboux.c0_closed_forms(p0, N)
                and lu1 == darboux.c0_tilde_closed_forms(p1, N)
            )

        out.append(self.run("darboux-factorization", darboux_case, factorization))

        def intertwining(s):
            p = s[0]
            seqs = build_lattice(p, N)
            L = recurrence.jacobi(self.minus1(p, N))
            lu = darboux.lu_shift(L, s[1].w)
            M = darboux.darboux_M(lu).to_banded()
            Ct = darboux.complementary_C(connection.build_C(seqs, N), lu)
            Ctb = Ct.to_banded().truncate(N)
            xf = connection.operator_matrices(seqs, N - 1)[0]
            return oracle.dense_product(M, Ctb).agrees_with(oracle.dense_product(Ctb, xf))

        out.append(self.run("complementary-intertwining", darboux_case, intertwining))

        def duality(s):
            p0 = s[1]
            image = darboux.psi_map(p0)
            return darboux.psi_inverse(image) == p0 and darboux.gamma(p0, N - 1) == darboux.gamma(image, N - 1)

        out.append(self.run("psi-duality", darboux_case, duality))

        def q_case(rng):
            q = rng.choice((Fraction(2), Fraction(3), Fraction(5, 2)))
            return random_params(rng, kind=general_q(q))

        out.append(self.run("general-q-substitution", q_case, lambda p: darboux.general_q_darboux_check(p, N).holds))
        out.append(self.run(
            "q-one-substitution", lambda rng: random_params(rng, kind=Q_ONE),
            lambda p: darboux.general_q_darboux_check(p, N).holds,
        ))

        def algebra(rng):
            return [random_rational(rng) for _ in range(4)]

        def relations(args):
            B = bialgebra.verify_algebra(bialgebra.build_B_triple(*args, N))
            L = bialgebra.verify_algebra(bialgebra.build_L_triple(*args, N))
            return B.holds and L.holds and B.measured == L.measured

        out.append(self.run("algebra-relations", algebra, relations))
        return out


def run_battery(seed: int = 0, order: int = 12, draws: int = 3, inject_fault: str | None = None) -> list[PropertyResult]:
    if order < 4:
        raise ValueError("order must be at least 4")
    return _Battery(seed, order, draws, inject_fault).properties()

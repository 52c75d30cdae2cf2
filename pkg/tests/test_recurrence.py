import random
from fractions import Fraction

import pytest

from minusone.battery import random_rational
from minusone.errors import DenominatorZero, InvalidParams
from minusone.field import GaussianRational, I
from minusone.presets import preset
from minusone.ratfit import fit_rational, is_perfect_square
from minusone.recurrence import (
    RecurrencePair,
    b2zero_params,
    coeffs_b2zero,
    coeffs_continuous,
    coeffs_general,
    coeffs_minus1,
    coeffs_pq,
    coeffs_rst,
    continuous_to_rst,
    jacobi,
    positivity_scan,
    pq_to_rst,
    rst_params,
)
from minusone.seqs import ParamSet, build_lattice

from conftest import draws, lattice_draws

F = Fraction


def rationals(rng, k):
    return [random_rational(rng) for _ in range(k)]


def test_chebyshev_general_and_closed():
    p = preset("chebyshev-like", dict(a2=1, sign="+")).params
    for rp in (coeffs_general(build_lattice(p, 9), 8), coeffs_minus1(p, 8)):
        assert rp.alpha == (F(1, 4),) * 8
        assert rp.beta == (F(-1, 2),) + (F(0),) * 8
    assert coeffs_minus1(preset("chebyshev-like", dict(a2=1, sign="-")).params, 3).b(0) == F(1, 2)


def test_zero_beta():
    p = preset("zero-beta").params
    rp = coeffs_general(build_lattice(p, 11), 10)
    assert rp.alpha == tuple(F(-n * n, 4) for n in range(1, 11))
    assert set(rp.beta) == {0}
    assert coeffs_minus1(p, 10) == rp


def test_beta0_from_first_terms():
    for _, s in lattice_draws(8, 3, 3):
        assert coeffs_general(s, 2).b(0) == s.x[0] + s.g[1] / (s.h[0] - s.h[1])


def test_general_needs_one_more_term():
    with pytest.raises(InvalidParams):
        coeffs_general(build_lattice(preset("zero-beta").params, 4), 4)


def test_bannai_ito_closed_vs_general():
    p = preset("bannai-ito", dict(alpha=1, beta=F(1, 2), gamma=F(1, 3), delta=F(1, 4))).params
    assert coeffs_minus1(p, 16) == coeffs_general(build_lattice(p, 17), 16)


def test_minus1_matches_general_with_b0():
    for p, s in lattice_draws(21, 10, 13):
        assert coeffs_minus1(p, 12) == coeffs_general(s, 12)


def test_b0_is_a_translation_once_e_compensates():
    # b0 = c also moves g_k by c (h_k - h_0); absorbing that into d1, d2 leaves a
    # pure translation of the variable.
    for p, s in lattice_draws(22, 5, 11):
        c = p.b0
        base = coeffs_general(build_lattice(p.with_(b0=0, d1=p.d1 + c * p.a1, d2=p.d2 + c * p.a2), 11), 10)
        moved = coeffs_general(s, 10)
        assert moved.alpha == base.alpha
        assert moved.beta == tuple(b + c for b in base.beta)


def test_b0_alone_is_not_a_translation():
    p = ParamSet(a1=F(1, 3), a2=1, b0=2, b1=F(1, 2), b2=1, d1=F(1, 5), d2=F(-1, 7))
    base = coeffs_general(build_lattice(p.with_(b0=0), 7), 6)
    assert coeffs_general(build_lattice(p, 7), 6).alpha != base.alpha


def test_denominator_zero_names_index():
    p = ParamSet(a1=F(-3, 2), a2=1, b1=1, b2=1, d1=0, d2=0)  # (2n-1) + 2a1 = 0 at n = 2
    with pytest.raises(DenominatorZero) as info:
        coeffs_minus1(p, 5)
    assert info.value.index == 2
    with pytest.raises(DenominatorZero):
        coeffs_rst(0, -3, 0, 0, 1, 5)
    with pytest.raises(DenominatorZero):
        coeffs_continuous(-2, 0, 0, 0, 4)


def test_minus1_rejects_other_lattices():
    from minusone.seqs import Q_ONE

    with pytest.raises(InvalidParams):
        coeffs_minus1(ParamSet(a1=1, a2=1, b1=0, b2=0, d1=0, d2=0, kind=Q_ONE), 3)


def test_rst_is_a_substitution_and_a2_cancels():
    def make(rng):
        args = rationals(rng, 4) + [random_rational(rng) or F(1)]
        return args, coeffs_rst(*args, 16)

    for args, rp in draws(31, 10, make):
        assert rp == coeffs_minus1(rst_params(*args, a2=1), 16) == coeffs_minus1(rst_params(*args, a2=F(-7, 3)), 16)


def test_rst_even_alpha_formula():
    r, s, t1, t2, b2 = F(1, 3), F(2, 5), F(-1, 2), F(3, 4), F(5, 2)
    rp = coeffs_rst(r, s, t1, t2, b2, 12)
    for n in range(2, 13, 2):
        expected = -b2 * b2 * n * (n + 2 * s) * (n + 2 * s - r + t2) * (n + r - t2) / (4 * (n + s) ** 2)
        assert rp.a(n) == expected


def test_rst_b2_scaling():
    r, s, t1, t2 = F(1, 3), F(2, 5), F(-1, 2), F(3, 4)
    lam = F(-3, 2)
    one, scaled = coeffs_rst(r, s, t1, t2, 1, 10), coeffs_rst(r, s, t1, t2, lam, 10)
    assert scaled.alpha == tuple(lam * lam * a for a in one.alpha)
    assert scaled.beta == tuple(lam * b for b in one.beta)


def test_pq_substitution_and_factorization():
    def make(rng):
        args = rationals(rng, 4)
        return args, random_rational(rng) or F(1), coeffs_pq(*args, F(1), 16)

    for (p, q, r, s), b2, rp in draws(32, 10, make):
        assert coeffs_pq(p, q, r, s, b2, 16) == coeffs_rst(*pq_to_rst(p, q, r, s), b2, 16)
        n = 2
        assert rp.a(n) == -n * (n + 2 * s) * (n - p - q - 2 * r) * (n + p + q + 2 * r + 2 * s) / (4 * (n + s) ** 2)
    assert coeffs_pq(3, F(1, 2), F(1, 5), F(1, 7), 1, 6).a(3) == 0


def test_b2zero_substitution():
    def make(rng):
        return rationals(rng, 4), rng.choice([1, 2, F(-1, 3)])

    for args, a2 in draws(33, 10, lambda rng: (lambda a: (a, coeffs_b2zero(*a[0], 16)))(make(rng))):
        (b1, s, t1, t2), a2 = args
        assert coeffs_b2zero(b1, s, t1, t2, 16) == coeffs_minus1(b2zero_params(b1, s, t1, t2, a2=a2), 16)


def test_continuous_is_real_and_matches_gaussian_path():
    def make(rng):
        args = rationals(rng, 4)
        return args, coeffs_continuous(*args, 16)

    for args, rp in draws(34, 10, make):
        assert all(isinstance(v, Fraction) for v in rp.alpha + rp.beta)
        assert rp == coeffs_rst(*continuous_to_rst(*args), 16)
        r, s, t1, t2, b2 = continuous_to_rst(*args)
        assert b2 == I and isinstance(t1, (GaussianRational, Fraction))


def test_continuous_special_cases():
    y2, w2 = F(3, 2), F(-5, 7)
    rp = coeffs_continuous(0, y2, 0, w2, 8)
    assert all(rp.a(n) == (n * n + (y2 if n % 2 == 0 else w2) ** 2) / 4 for n in range(1, 9))
    assert rp.beta == (-y2 / 2,) + (F(0),) * 8
    rp = coeffs_continuous(0, 0, 0, 0, 8)
    assert rp.alpha == tuple(F(n * n, 4) for n in range(1, 9)) and set(rp.beta) == {0}
    assert set(coeffs_continuous(F(1, 3), 0, F(2, 5), 0, 8).beta) == {0}


def test_positivity_scan():
    assert positivity_scan(coeffs_continuous(F(1, 2), 1, F(1, 4), 2, 32)).positive
    assert positivity_scan(coeffs_continuous(0, 0, 0, 0, 16)).positive
    report = positivity_scan(coeffs_minus1(preset("zero-beta").params, 10))
    assert report.nonpositive == tuple(range(1, 11)) and report.beta_real


def test_jacobi_layout():
    L = jacobi(coeffs_minus1(preset("chebyshev-like", dict(a2=1, sign="+")).params, 5)).to_banded()
    assert L.diagonal(0) == [F(-1, 2)] + [F(0)] * 5
    assert L.diagonal(-1) == [F(1, 4)] * 5 and L.diagonal(1) == [F(1)] * 5
    assert jacobi(RecurrencePair((), (F(3),))).to_banded().rows() == [[3]]
    Z = jacobi(coeffs_minus1(preset("zero-beta").params, 4)).to_banded()
    assert Z.diagonal(-1) == [F(-1, 4), F(-1), F(-9, 4), F(-4)]


def test_alpha_denominator_is_a2_times_square():
    # Per parity class, alpha_n * a2 ((2n-1) a2 + 2 a1)^2 is a polynomial in n
    # and the fitted monic denominator is a perfect square.
    rng = random.Random(41)
    checked = 0
    while checked < 3:
        a1, a2, b1, b2, d1, d2 = rationals(rng, 6)
        if a2 == 0:
            continue
        p = ParamSet(a1=a1, a2=a2, b1=b1, b2=b2, d1=d1, d2=d2)
        try:
            rp = coeffs_minus1(p, 32)
        except DenominatorZero:
            continue
        for parity in (0, 1):
            ns = [n for n in range(1, 33) if n % 2 == parity]
            fit = fit_rational(ns, [rp.a(n) for n in ns])
            assert fit.degrees[1] == 2 and is_perfect_square(fit.den)
            cleared = [rp.a(n) * a2 * ((2 * n - 1) * a2 + 2 * a1) ** 2 for n in ns]
            assert fit_rational(ns, cleared).degrees[1] == 0
        checked += 1

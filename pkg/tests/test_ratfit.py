from fractions import Fraction

import pytest

from minusone.errors import InsufficientSamples
from minusone.ratfit import fit_rational, is_perfect_square, poly_from_roots, square_free_multiplicities

F = Fraction


def test_polynomial_fit():
    xs = list(range(8))
    fit = fit_rational(xs, [3 * x * x - 1 for x in xs])
    assert fit.num == (-1, 0, 3) and fit.den == (1,)


def test_rational_fit_and_evaluation():
    xs = [F(k) for k in range(12)]
    f = lambda x: (x * x + 1) / ((x + F(1, 2)) * (x + 3))
    fit = fit_rational(xs, [f(x) for x in xs])
    assert fit.degrees == (2, 2)
    assert fit.den == poly_from_roots([(F(-1, 2), 1), (-3, 1)])
    assert fit(F(100)) == f(F(100))


def test_too_few_samples():
    xs = [F(k) for k in range(5)]
    with pytest.raises(InsufficientSamples):
        fit_rational(xs, [1 / (x + 1) ** 3 for x in xs])


def test_bad_inputs():
    with pytest.raises(ValueError):
        fit_rational([1, 1], [2, 3])
    with pytest.raises(ValueError):
        fit_rational([1, 2], [2])


def test_squares():
    assert is_perfect_square(poly_from_roots([(F(1, 3), 2), (-2, 4)]))
    assert not is_perfect_square(poly_from_roots([(1, 1), (2, 1)]))
    assert square_free_multiplicities(poly_from_roots([(1, 1), (2, 3)])) == [1, 3]

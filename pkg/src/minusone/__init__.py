"""Exact arithmetic for -1 orthogonal polynomials.

Lattice sequences, connection matrices, recurrence coefficients in several
parametrizations, shifted Darboux transforms, Bannai-Ito algebra
realizations, and brute-force oracles to cross-check all of them.
"""

from .errors import MinusOneError
from .field import GaussianRational, I, parse_scalar, render_scalar
from .recurrence import RecurrencePair, coeffs_general, coeffs_minus1
from .seqs import MINUS_ONE, Q_ONE, ParamSet, build_lattice, general_q

__all__ = [
    "GaussianRational",
    "I",
    "MINUS_ONE",
    "MinusOneError",
    "ParamSet",
    "Q_ONE",
    "RecurrencePair",
    "build_lattice",
    "coeffs_general",
    "coeffs_minus1",
    "general_q",
    "parse_scalar",
    "render_scalar",
]

from minusone.connection import build_C, operator_matrices
from minusone.darboux import ParamVector, c0_closed_forms, lu_shift
from minusone.oracle import dense_product
from minusone.recurrence import coeffs_general, coeffs_minus1, jacobi
from minusone.seqs import build_lattice

from conftest import lattice_draws

N = 64


def test_order_64():
    for p, s in lattice_draws(64, 2, N + 1):
        rp = coeffs_minus1(p, N)
        assert rp == coeffs_general(s, N)
        C = build_C(s, N).to_banded()
        xf, _ = operator_matrices(s, N)
        L = jacobi(rp).to_banded()
        assert dense_product(L, C).agrees_with(dense_product(C, xf))
        pv = ParamVector.in_gauge0(p)
        assert c0_closed_forms(pv, N) == lu_shift(jacobi(rp), pv.w)

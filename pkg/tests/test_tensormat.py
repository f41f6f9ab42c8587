from fractions import Fraction

import numpy as np
import pytest

from capelli.fusion import phi_lambda_mu
from capelli.symgroup import GroupAlgebraElement as GA, Permutation
from capelli.tensormat import (
    F_lambda,
    TensorMatrix,
    capelli_matrix_polynomial,
    e_lambda,
    e_lambda_coefficients,
    e_lambda_poly,
    perm_to_matrix,
    quantum_determinant,
    r_lambda_mu,
    trace_F,
    verify_projector_product,
    verify_qdet_divisibility,
    verify_rtt_evaluation,
    verify_vanishing,
)
from capelli.ugl import UglElement, is_central, ugl_mul
from capelli.young import gl_dimension


def E(i, j, N):
    return UglElement.generator(N, i, j)


def test_swap_matrix():
    M = perm_to_matrix(GA.transposition(2, 1, 2), 2).to_dense()
    expected = np.zeros((4, 4), dtype=object)
    for a in range(2):
        for b in range(2):
            expected[2 * b + a, 2 * a + b] = 1
    assert (M == expected).all()


def test_identity_matrix():
    assert perm_to_matrix(GA.one(3), 2) == TensorMatrix.identity(2, 3)


def test_column_antisymmetrizer():
    F = F_lambda((1, 1), 2)
    assert F.trace() == 1
    assert F @ F == F
    assert np.linalg.matrix_rank(F.to_dense().astype(float)) == 1


@pytest.mark.parametrize("lam,N", [((2,), 2), ((2, 1), 2), ((2, 1), 3), ((1, 1, 1), 2), ((3,), 2)])
def test_trace_of_F_counts_tableaux(lam, N):
    assert trace_F(lam, N) == gl_dimension(lam, N)


def test_single_box_capelli_matrix():
    N = 2
    M = capelli_matrix_polynomial((1,), N).matrix
    for r in range(N):
        for c in range(N):
            p = M.entry(r, c)
            assert p.coefficient(0) == E(c + 1, r + 1, N)
            assert p.coefficient(1) == (UglElement.one(N) if r == c else UglElement.zero(N))


def test_single_row_rank_one():
    x = e_lambda((2,), 1)
    e = E(1, 1, 1)
    assert x == ugl_mul(e, e) - e


def test_e_lambda_values():
    assert e_lambda((1,), 3) == E(1, 1, 3) + E(2, 2, 3) + E(3, 3, 3)
    co = e_lambda_coefficients((1,), 3)
    assert co[1] == UglElement.one(3, 3)
    x = e_lambda((1, 1), 2)
    assert is_central(x) and x
    assert e_lambda_poly((1, 1, 1), 2).is_zero()
    assert capelli_matrix_polynomial((1, 1, 1), 2).degenerate


def test_quantum_determinant_rank_one_and_two():
    assert quantum_determinant(1) == [E(1, 1, 1).scale(-1)]
    D1, D2 = quantum_determinant(2)
    assert D1 == (E(1, 1, 2) + E(2, 2, 2)).scale(-1)
    assert D2 == ugl_mul(E(1, 1, 2), E(2, 2, 2)) - ugl_mul(E(1, 2, 2), E(2, 1, 2)) - E(2, 2, 2)
    assert is_central(D2)
    assert verify_qdet_divisibility(2)


def test_rtt():
    for N in (1, 2):
        assert verify_rtt_evaluation(N)


@pytest.mark.parametrize("lam,N", [((1,), 1), ((2,), 2), ((2, 1), 2)])
def test_projector_product(lam, N):
    assert verify_projector_product(lam, N)


def test_projector_product_rejects_tall_shapes():
    with pytest.raises(ValueError):
        verify_projector_product((1, 1, 1), 2)


@pytest.mark.parametrize("lam,mu", [((1, 1), (1,)), ((2,), (1,)), ((2, 1), (2,)), ((2, 1), (1, 1))])
def test_vanishing(lam, mu):
    assert verify_vanishing(lam, mu, 2)


def test_vanishing_fails_at_equal_size():
    with pytest.raises(ValueError):
        verify_vanishing((1,), (1,), 2)


def test_r_lambda_mu_matches_group_algebra():
    R = r_lambda_mu((1,), (1,), 2)
    assert R.pole_order() == 1
    got = R.matrix()
    want = perm_to_matrix(phi_lambda_mu((1,), (1,)), 2)
    assert got == want

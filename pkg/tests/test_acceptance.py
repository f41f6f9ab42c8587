"""Acceptance suite: one test per criterion, all checks exact.

A per-criterion PASS/FAIL line is printed in the terminal summary.
"""

from itertools import product

import pytest

from capelli.fusion import (
    fusion_limit,
    pole_order_phi,
    upsilon_limit,
    verify_local_identities,
    verify_shifted_product,
)
from capelli.symgroup import all_permutations
from capelli.tensormat import (
    e_lambda_coefficients,
    quantum_determinant,
    trace_F,
    verify_projector_product,
    verify_qdet_divisibility,
    verify_rtt_evaluation,
    verify_vanishing,
)
from capelli.ugl import UglElement, is_central
from capelli.weyl import (
    c_lambda,
    capelli_image,
    capelli_product,
    commutator,
    gl_action,
    verify_homomorphism,
)
from capelli.young import (
    character_from_symmetrizer,
    character_mn,
    column_factorial_product,
    contains,
    dimension_enumerated,
    dimension_hook,
    idempotent,
    partitions,
    phi_lambda,
    qp_product,
    qpq_product,
    rank,
)


def diagrams(max_n, min_n=1):
    return [lam for n in range(min_n, max_n + 1) for lam in partitions(n)]


def capelli_range():
    cases = [(lam, N, M) for lam in diagrams(3) for N in (1, 2, 3) for M in (1, 2, 3)]
    cases += [(lam, 2, 2) for lam in partitions(4)]
    return cases


@pytest.mark.criterion(1, "fusion limit equals QPQ over column factorials, all 18 diagrams with n <= 5")
def test_fusion_limit():
    shapes = diagrams(5)
    assert len(shapes) == 18
    bad = [lam for lam in shapes if fusion_limit(lam) != qpq_product(lam) / column_factorial_product(lam)]
    assert not bad, f"fusion limit differs for {bad}"


@pytest.mark.criterion(2, "partial fusion limit equals Q P, n <= 5")
def test_upsilon_limit():
    bad = [lam for lam in diagrams(5) if upsilon_limit(lam) != qp_product(lam)]
    assert not bad


@pytest.mark.criterion(3, "identity coefficient 1 and idempotency of (dim/n!) Phi, n <= 5")
def test_identity_coefficient_and_idempotency():
    for lam in diagrams(5):
        assert phi_lambda(lam).identity_coefficient() == 1, lam
        e = idempotent(lam)
        assert e * e == e, lam


@pytest.mark.criterion(4, "three-factor relations and restriction formulas, 3 samples plus a symbolic line")
def test_local_identities():
    report: dict = {}
    assert verify_local_identities(samples=3, seed=2024, report=report)
    assert set(report) == {
        "yang_baxter",
        "commutation",
        "restriction_first_pair",
        "restriction_last_pair",
        "corner_value",
    }
    assert all(report.values()), report


@pytest.mark.criterion(5, "product identity in an extra point u, n <= 5")
def test_shifted_product():
    bad = [lam for lam in diagrams(5) if not verify_shifted_product(lam)]
    assert not bad


@pytest.mark.criterion(6, "pole order at most rank, at most rank - 1 when not contained, n, m <= 4")
def test_pole_order_bound():
    failures = []
    for lam in diagrams(4, 0):
        for mu in diagrams(4, 0):
            order = pole_order_phi(lam, mu)
            if order > rank(lam):
                failures.append((lam, mu, order))
            if not contains(lam, mu) and order > rank(lam) - 1:
                failures.append((lam, mu, order))
    assert not failures, failures


@pytest.mark.criterion(7, "RTT relation under the evaluation map, N <= 3")
def test_rtt():
    for N in (1, 2, 3):
        assert verify_rtt_evaluation(N), N


@pytest.mark.criterion(8, "projector product identity, n <= 4, N <= 3")
def test_projector_product():
    checked = 0
    for lam in diagrams(4):
        for N in (1, 2, 3):
            if len(lam) <= N:
                assert verify_projector_product(lam, N), (lam, N)
                checked += 1
    assert checked > 0


@pytest.mark.criterion(9, "quantum determinant coefficients central and divisibility exact, N <= 3")
def test_quantum_determinant():
    for N in (1, 2, 3):
        coeffs = quantum_determinant(N)
        assert len(coeffs) == N
        for c in coeffs:
            assert is_central(c), (N, c)
        assert verify_qdet_divisibility(N), N


@pytest.mark.criterion(10, "z-coefficients of e_lambda(z) central, leading one the trace of F, n, N <= 3")
def test_e_lambda_central():
    for lam in diagrams(3):
        for N in (1, 2, 3):
            co = e_lambda_coefficients(lam, N)
            for c in co:
                assert is_central(c), (lam, N, c)
            assert co[-1] == UglElement.one(N, trace_F(lam, N)), (lam, N)


@pytest.mark.criterion(11, "E_lambda(0) vanishes on smaller irreducibles, n, N <= 3")
def test_vanishing():
    checked = 0
    for lam in diagrams(3):
        for N in (1, 2, 3):
            for mu in diagrams(lam.n - 1, 0):
                if len(mu) <= N:
                    assert verify_vanishing(lam, mu, N), (lam, mu, N)
                    checked += 1
    assert checked > 0


@pytest.mark.criterion(12, "image of e_lambda = character sum = ordered product, n <= 3 and n = 4 at N = M = 2")
def test_capelli_identity():
    cases = capelli_range()
    assert ((1, 1), 2, 2) in [(tuple(l), N, M) for l, N, M in cases]
    for lam, N, M in cases:
        c = c_lambda(lam, N, M)
        assert capelli_image(lam, N, M) == c, (lam, N, M)
        assert capelli_product(lam, N, M) == c, (lam, N, M)


@pytest.mark.criterion(13, "the Capelli operator commutes with gl_N x gl_M, same ranges")
def test_invariance():
    for lam, N, M in capelli_range():
        c = c_lambda(lam, N, M)
        for side, K in (("glN", N), ("glM", M)):
            for i, j in product(range(1, K + 1), repeat=2):
                assert not commutator(c, gl_action(side, i, j, N, M)), (lam, N, M, side, i, j)


@pytest.mark.criterion(14, "cross-oracle checks: characters, dimensions, homomorphism")
def test_cross_oracles():
    for lam in diagrams(4):
        seen = set()
        for sigma in all_permutations(lam.n):
            ct = sigma.cycle_type()
            if ct in seen:
                continue
            seen.add(ct)
            assert character_mn(lam, ct) == character_from_symmetrizer(lam, ct), (lam, ct)
    for lam in diagrams(6):
        assert dimension_enumerated(lam) == dimension_hook(lam), lam
    for N in (1, 2, 3):
        for M in (1, 2, 3):
            assert verify_homomorphism(N, M, samples=4, seed=10 * N + M), (N, M)

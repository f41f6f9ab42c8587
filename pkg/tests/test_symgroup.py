from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from capelli.symgroup import (
    GroupAlgebraElement as GA,
    Permutation,
    all_permutations,
    alpha,
    embed_shift,
    ga_mul,
)
from capelli.young import phi_lambda


def t(n, i, j, c=1):
    return GA.transposition(n, i, j, c)


def test_composition_is_right_to_left():
    s = Permutation.from_cycles(3, [(1, 2)])
    r = Permutation.from_cycles(3, [(2, 3)])
    # (s r)(3) = s(r(3)) = s(2) = 1
    assert (s * r).one_based()[2] == 1


def test_idempotent_difference_annihilates():
    assert ga_mul(GA.one(2) - t(2, 1, 2), GA.one(2) + t(2, 1, 2)) == 0


def test_unit():
    x = GA.one(3) + t(3, 1, 3, Fraction(2, 3))
    assert ga_mul(GA.one(3), x) == x


def test_product_of_two_sums():
    a = GA.one(3) + t(3, 1, 2)
    b = GA.one(3) + t(3, 1, 3)
    s12 = Permutation.transposition(3, 1, 2)
    s13 = Permutation.transposition(3, 1, 3)
    expected = GA.one(3) + t(3, 1, 2) + t(3, 1, 3) + GA.basis(s12 * s13)
    assert ga_mul(a, b) == expected


def test_alpha():
    c = Permutation.from_cycles(3, [(1, 2, 3)])
    x = GA.one(3) + GA.basis(c, 2)
    assert alpha(x) == GA.one(3) + GA.basis(Permutation.from_cycles(3, [(1, 3, 2)]), 2)
    assert alpha(alpha(x)) == x
    for lam in [(2,), (2, 1), (3, 1), (2, 2)]:
        assert alpha(phi_lambda(lam)) == phi_lambda(lam)


def test_embed_shift():
    assert embed_shift(t(2, 1, 2), 1, 3) == t(3, 2, 3)
    assert embed_shift(GA.one(2), 2, 5) == GA.one(5)
    assert embed_shift(GA.one(2) - t(2, 1, 2), 2, 4) == GA.one(4) - t(4, 3, 4)
    with pytest.raises(ValueError):
        embed_shift(GA.one(3), 2, 4)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        ga_mul(GA.one(2), GA.one(3))


def test_json_round_trip():
    x = GA.one(3) + t(3, 1, 2, Fraction(-1, 2))
    assert GA.from_json(x.to_json()) == x
    assert x.to_json()[0] == {"perm": [1, 2, 3], "coeff": "1"}


def test_cycles_and_sign():
    p = Permutation.from_cycles(4, [(1, 2, 3)])
    assert p.cycle_type() == (3, 1)
    assert p.sign() == 1
    assert Permutation.transposition(4, 2, 4).sign() == -1
    assert repr(p) == "(1 2 3)"


perms3 = st.permutations(range(3)).map(Permutation)
coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
elements3 = st.dictionaries(perms3, coeffs, max_size=4).map(lambda d: GA(3, d))


@settings(max_examples=50, deadline=None)
@given(perms3, perms3, perms3)
def test_group_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(3)
    assert (a * b).sign() == a.sign() * b.sign()


@settings(max_examples=50, deadline=None)
@given(elements3, elements3, elements3)
def test_algebra_axioms(a, b, c):
    assert ga_mul(ga_mul(a, b), c) == ga_mul(a, ga_mul(b, c))
    assert ga_mul(a, b + c) == ga_mul(a, b) + ga_mul(a, c)
    assert alpha(ga_mul(a, b)) == ga_mul(alpha(b), alpha(a))


@settings(max_examples=50, deadline=None)
@given(elements3, st.integers(1, 3), st.integers(1, 3))
def test_transposition_shortcuts(a, i, j):
    if i == j:
        return
    s = t(3, i, j)
    assert a.mul_transposition_right(i, j) == ga_mul(a, s)
    assert a.mul_transposition_left(i, j) == ga_mul(s, a)


def test_all_permutations_is_lexicographic():
    ps = list(all_permutations(4))
    assert len(ps) == 24 and ps == sorted(ps)

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from capelli.symgroup import GroupAlgebraElement as GA, Permutation, all_permutations
from capelli.young import (
    YoungDiagram,
    character,
    character_from_symmetrizer,
    character_mn,
    column_tableau,
    contains,
    contents,
    dimension,
    dimension_enumerated,
    dimension_hook,
    gl_dimension,
    idempotent,
    partitions,
    phi_lambda,
    rank,
    row_indices,
    ssyt_count_enumerated,
    ssyt_count_hook_content,
    symmetrizers,
    y_coefficients,
)


def t(n, i, j):
    return GA.transposition(n, i, j)


def test_parse():
    assert YoungDiagram.parse("3,2,1") == (3, 2, 1)
    assert YoungDiagram.parse("") == ()
    with pytest.raises(ValueError):
        YoungDiagram.parse("1,2")
    with pytest.raises(ValueError):
        YoungDiagram.parse("2,x")


def test_contents():
    assert contents((2,)) == (0, 1)
    assert contents((1, 1)) == (0, -1)
    assert contents((2, 2)) == (0, -1, 1, 0)
    assert row_indices((2, 2)) == (1, 2, 1, 2)
    assert column_tableau((3, 1)).rows == ((1, 3, 4), (2,))


def test_symmetrizers_small():
    P, Q, Phi = symmetrizers((2,))
    assert P == GA.one(2) + t(2, 1, 2) and Q == GA.one(2) and Phi == P
    P, Q, Phi = symmetrizers((1, 1))
    assert P == GA.one(2) and Q == GA.one(2) - t(2, 1, 2) and Phi == Q


def test_symmetrizer_hook_shape():
    q = GA.one(3) - t(3, 1, 2)
    p = GA.one(3) + t(3, 1, 3)
    assert phi_lambda((2, 1)) == q * p * q / 2
    assert phi_lambda((2, 1)).identity_coefficient() == 1


def test_empty_diagram():
    assert phi_lambda(()) == GA.one(0)
    assert dimension(()) == 1
    assert rank(()) == 0


def test_characters():
    for n in range(1, 5):
        for s in all_permutations(n):
            assert character((n,), s) == 1
            assert character(tuple([1] * n), s) == s.sign()
    assert character((2, 1), Permutation.from_cycles(3, [(1, 2, 3)])) == -1


def test_dimensions():
    assert dimension((4,)) == 1
    assert dimension((2, 1)) == 2
    assert dimension((2, 2)) == 2
    for n in range(1, 7):
        assert sum(dimension(l) ** 2 for l in partitions(n)) == factorial(n)
        for l in partitions(n):
            assert dimension_enumerated(l) == dimension_hook(l)


def test_partition_counts():
    assert [len(list(partitions(n))) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]


def test_y_coefficients():
    assert y_coefficients((1,)) == {Permutation.identity(1): 1}
    y = y_coefficients((2,))
    assert set(y.values()) == {Fraction(1, 2)} and len(y) == 2
    e = idempotent((2, 1))
    assert e == phi_lambda((2, 1)) * Fraction(2, 6)
    assert e * e == e


def test_rank_and_containment():
    assert rank((2, 2)) == 2
    assert rank((5,)) == 1
    assert contains((2, 1), (2, 2))
    assert not contains((2,), (1, 1))
    assert contains((), (1,))


def test_gl_dimensions():
    assert gl_dimension((1, 1), 2) == 1
    assert gl_dimension((2,), 3) == 6
    assert gl_dimension((1, 1, 1), 2) == 0
    for lam in [(2, 1), (3,), (2, 2), (3, 1)]:
        for N in (1, 2, 3):
            assert ssyt_count_enumerated(lam, N) == ssyt_count_hook_content(lam, N)


shapes = st.integers(1, 5).flatmap(lambda n: st.sampled_from(list(partitions(n))))


@settings(max_examples=25, deadline=None)
@given(shapes)
def test_conjugate_swaps_characters_by_sign(lam):
    conj = lam.conjugate()
    seen = set()
    for s in all_permutations(lam.n):
        if s.cycle_type() in seen:
            continue
        seen.add(s.cycle_type())
        assert character_mn(conj, s.cycle_type()) == s.sign() * character_mn(lam, s.cycle_type())


@settings(max_examples=25, deadline=None)
@given(shapes)
def test_character_oracles_agree(lam):
    if lam.n > 4:
        return
    for s in all_permutations(lam.n):
        assert character_mn(lam, s.cycle_type()) == character_from_symmetrizer(lam, s.cycle_type())


@settings(max_examples=20, deadline=None)
@given(shapes)
def test_phi_scaling(lam):
    phi = phi_lambda(lam)
    assert phi * phi == phi * Fraction(factorial(lam.n), dimension(lam))

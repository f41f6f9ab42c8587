from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from capelli.ugl import (
    DegreeCapExceeded,
    UglElement,
    casimir,
    commutator,
    generators,
    is_central,
    trace_element,
    ugl_mul,
)


def E(i, j, N=2):
    return UglElement.generator(N, i, j)


def test_sorted_product_unchanged():
    assert ugl_mul(E(1, 2), E(2, 1)) == UglElement(2, {((1, 2), (2, 1)): 1})


def test_reordering_uses_commutator():
    expected = ugl_mul(E(1, 2), E(2, 1)) - E(1, 1) + E(2, 2)
    assert ugl_mul(E(2, 1), E(1, 2)) == expected


def test_unit():
    x = E(2, 1) + E(1, 1).scale(Fraction(1, 3))
    assert ugl_mul(UglElement.one(2), x) == x


def test_commutation_relation():
    for N in (2, 3):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                for k in range(1, N + 1):
                    for l in range(1, N + 1):
                        lhs = commutator(E(i, j, N), E(k, l, N))
                        rhs = UglElement.zero(N)
                        if j == k:
                            rhs = rhs + E(i, l, N)
                        if l == i:
                            rhs = rhs - E(k, j, N)
                        assert lhs == rhs


def test_centrality():
    assert is_central(trace_element(3))
    assert is_central(casimir(3))
    assert not is_central(E(1, 2))


def test_degree_cap():
    x = E(1, 2)
    with pytest.raises(DegreeCapExceeded):
        ugl_mul(x, x, degree_cap=1)


def test_json_round_trip():
    x = ugl_mul(E(2, 1), E(1, 2)) + UglElement.one(2, Fraction(-1, 2))
    assert UglElement.from_json(2, x.to_json()) == x


gen_index = st.tuples(st.integers(1, 2), st.integers(1, 2))
monomials = st.lists(gen_index, max_size=2)
elements = st.dictionaries(monomials.map(lambda m: tuple(sorted(m))), st.integers(-3, 3), max_size=3).map(
    lambda d: UglElement(2, d)
)


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert ugl_mul(ugl_mul(a, b), c) == ugl_mul(a, ugl_mul(b, c))


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_jacobi(a, b, c):
    jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert jac == UglElement.zero(2)


@settings(max_examples=40, deadline=None)
@given(elements)
def test_casimir_commutes_with_everything(a):
    assert commutator(casimir(2), a) == UglElement.zero(2)


def test_generator_list():
    assert len(generators(3)) == 9

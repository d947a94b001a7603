"""Tests for monomial ideal arithmetic."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import DimensionError, PreconditionError
from monomial_core import (
    MonomialIdeal,
    contains_ideal,
    contains_monomial,
    divides,
    intersect,
    irreducible_decomposition,
    is_irreducible,
    lcm,
    minimalize,
    multiply,
    power,
    radical_contains,
    support,
)


def ideals(n, max_exp=3, max_gens=3):
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.lists(mono, min_size=1, max_size=max_gens).map(lambda gens: MonomialIdeal(n, gens))


def proper_ideals(n, max_exp=3, max_gens=3):
    return ideals(n, max_exp, max_gens).filter(lambda I: not I.is_unit)


def box(n, bound):
    return itertools.product(range(bound + 1), repeat=n)


@pytest.mark.parametrize("m1,m2,expected", [
    ((1, 1), (2, 1), True),
    ((2, 0), (1, 3), False),
    ((0, 0), (5, 7), True),
])
def test_divides(m1, m2, expected):
    assert divides(m1, m2) == expected


def test_divides_length_mismatch():
    with pytest.raises(DimensionError):
        divides((1,), (1, 2))


def test_contains_monomial():
    assert contains_monomial(MonomialIdeal(2, [(1, 1), (0, 2)]), (2, 1))
    assert not contains_monomial(MonomialIdeal(1, [(2,)]), (1,))
    assert not contains_monomial(MonomialIdeal.zero(2), (3, 3))


def test_contains_ideal():
    x = MonomialIdeal(2, [(1, 0)])
    assert contains_ideal(x, MonomialIdeal(2, [(2, 0), (1, 1)]))
    assert not contains_ideal(MonomialIdeal(2, [(2, 0), (0, 1)]), x)
    assert contains_ideal(x, x)


def test_contains_ideal_dimension_mismatch():
    with pytest.raises(DimensionError):
        contains_ideal(MonomialIdeal(1, [(1,)]), MonomialIdeal(2, [(1, 0)]))


def test_minimalize():
    assert minimalize([(2, 0), (3, 0), (1, 1)]).generators == ((2, 0), (1, 1))
    assert minimalize([], ambient_dim=2).is_zero
    antichain = MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert minimalize(antichain.generators) == antichain


def test_zero_and_unit():
    assert MonomialIdeal.zero(3).is_zero
    assert MonomialIdeal.unit(3).is_unit
    assert MonomialIdeal(2, [(0, 0), (4, 1)]) == MonomialIdeal.unit(2)


def test_rejects_bad_generators():
    with pytest.raises(PreconditionError):
        MonomialIdeal(2, [(1, -1)])
    with pytest.raises(DimensionError):
        MonomialIdeal(2, [(1, 1, 1)])
    with pytest.raises(PreconditionError):
        MonomialIdeal(0, [])


def test_immutable():
    ideal = MonomialIdeal(1, [(1,)])
    with pytest.raises(AttributeError):
        ideal._gens = ()


def test_multiply():
    x = MonomialIdeal(2, [(1, 0)])
    y = MonomialIdeal(2, [(0, 1)])
    assert multiply(x, y) == MonomialIdeal(2, [(1, 1)])
    assert multiply(x, MonomialIdeal.unit(2)) == x
    m = MonomialIdeal(2, [(1, 0), (0, 1)])
    assert multiply(m, m) == MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])


def test_power(cusp, edges):
    assert power(cusp, 0).is_unit
    assert power(cusp, 2).generators == ((4, 0), (2, 3), (0, 6))
    assert power(edges, 2) == MonomialIdeal(3, [
        (2, 2, 0), (0, 2, 2), (2, 0, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2),
    ])
    with pytest.raises(PreconditionError):
        power(cusp, -1)


@pytest.mark.parametrize("J,a,expected", [
    ([(3, 0), (0, 3)], [(2, 0), (0, 3)], True),
    ([(2, 0)], [(0, 1)], False),
    ([(1, 1)], [(1, 0)], False),
])
def test_radical_contains(J, a, expected):
    assert radical_contains(MonomialIdeal(2, J), MonomialIdeal(2, a)) == expected


def test_radical_contains_rejects_unit():
    with pytest.raises(PreconditionError):
        radical_contains(MonomialIdeal.unit(2), MonomialIdeal(2, [(1, 0)]))


def test_irreducible_decomposition_examples():
    assert irreducible_decomposition(MonomialIdeal(2, [(2, 0), (1, 1)])) == [
        MonomialIdeal(2, [(1, 0)]), MonomialIdeal(2, [(2, 0), (0, 1)]),
    ]
    cusp = MonomialIdeal(2, [(2, 0), (0, 3)])
    assert irreducible_decomposition(cusp) == [cusp]
    assert irreducible_decomposition(MonomialIdeal(2, [(1, 1)])) == [
        MonomialIdeal(2, [(0, 1)]), MonomialIdeal(2, [(1, 0)]),
    ]


@pytest.mark.parametrize("ideal", [MonomialIdeal.zero(2), MonomialIdeal.unit(2)])
def test_irreducible_decomposition_rejects(ideal):
    with pytest.raises(PreconditionError):
        irreducible_decomposition(ideal)


def test_helpers():
    assert lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert support((0, 2, 1)) == frozenset({1, 2})
    assert MonomialIdeal(2, [(2, 1), (0, 5)]).max_degree == 5


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=6), st.randoms())
def test_minimalize_idempotent_and_order_independent(gens, rnd):
    ideal = minimalize(gens, ambient_dim=2)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert minimalize(shuffled, ambient_dim=2) == ideal
    assert minimalize(ideal.generators, ambient_dim=2) == ideal
    for g, h in itertools.permutations(ideal.generators, 2):
        assert not divides(g, h)


@settings(max_examples=40, deadline=None)
@given(ideals(3), ideals(3), ideals(3))
def test_multiply_commutative_associative(I, K, L):
    assert multiply(I, K) == multiply(K, I)
    assert multiply(multiply(I, K), L) == multiply(I, multiply(K, L))
    for m in K.generators:
        shifted = MonomialIdeal(3, [tuple(u + v for u, v in zip(g, m)) for g in I.generators])
        assert contains_ideal(multiply(I, K), shifted)


@settings(max_examples=30, deadline=None)
@given(ideals(2), st.integers(0, 5))
def test_power_recursion(I, s):
    assert power(I, s + 1) == multiply(power(I, s), I)


@settings(max_examples=60, deadline=None)
@given(proper_ideals(3))
def test_decomposition_membership(J):
    components = irreducible_decomposition(J)
    assert all(is_irreducible(K) for K in components)
    bound = max(max(g) for g in J.generators) + 1
    for m in box(3, bound):
        assert contains_monomial(J, m) == all(contains_monomial(K, m) for K in components)
    for K in components:
        others = [L for L in components if L != K]
        assert not any(contains_ideal(K, L) for L in others)


@settings(max_examples=40, deadline=None)
@given(proper_ideals(2), proper_ideals(2))
def test_intersection_of_components(J, K):
    result = J
    for component in irreducible_decomposition(J):
        result = intersect(result, component)
    assert result == J
    both = intersect(J, K)
    for m in box(2, 4):
        assert contains_monomial(both, m) == (contains_monomial(J, m) and contains_monomial(K, m))


@settings(max_examples=60, deadline=None)
@given(proper_ideals(3), ideals(3))
def test_radical_contains_matches_powers(J, a):
    max_exp = max(max(g) for g in J.generators)
    N = max_exp * len(a)
    assert radical_contains(J, a) == contains_ideal(J, power(a, N))


@settings(max_examples=40, deadline=None)
@given(ideals(3), ideals(3), st.tuples(*[st.integers(0, 2)] * 3))
def test_product_contains_monomial_multiples(I, K, shift):
    product = multiply(I, K)
    for g in K.generators:
        m = tuple(u + v for u, v in zip(g, shift))
        assert contains_ideal(product, multiply(I, MonomialIdeal(3, [m])))

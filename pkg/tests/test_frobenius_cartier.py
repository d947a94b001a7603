"""Tests for bracket powers, Cartier images and the Cartier chain."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import PreconditionError, ResourceBudgetError
from frobenius_cartier import (
    PrimePower,
    bracket_member,
    bracket_power,
    cartier_image,
    dynamics_violations,
    nu_set_chain,
    nu_set_chain_unrestricted,
)
from monomial_core import MonomialIdeal, contains_ideal, contains_monomial, intersect
from nu_engine import default_grid, nu_set_grid

small_ideals = st.lists(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=3
).map(lambda gens: MonomialIdeal(2, gens))
proper_ideals = small_ideals.filter(lambda I: not I.is_unit)


def test_prime_power():
    assert PrimePower(3, 2).value == 9
    assert PrimePower(2, 1).next_level() == PrimePower(2, 2)
    with pytest.raises(PreconditionError):
        PrimePower(4, 1)
    with pytest.raises(PreconditionError):
        PrimePower(2, 0)


def test_bracket_power(cusp):
    assert bracket_power(cusp, 4) == MonomialIdeal(2, [(8, 0), (0, 12)])
    assert bracket_power(cusp, 1) == cusp
    cube = MonomialIdeal(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    assert bracket_power(cube, 5).generators == ((15, 0, 0), (0, 15, 0), (0, 0, 15))
    with pytest.raises(PreconditionError):
        bracket_power(cusp, 0)


def test_bracket_member():
    J = MonomialIdeal(1, [(2,)])
    assert not bracket_member((7,), J, 4)
    assert bracket_member((8,), J, 4)
    assert bracket_member((2,), J, 1) == contains_monomial(J, (2,))


def test_cartier_image():
    assert cartier_image(MonomialIdeal(2, [(3, 1)]), PrimePower(2, 1)) == MonomialIdeal(2, [(1, 0)])
    assert cartier_image(MonomialIdeal(1, [(9,)]), PrimePower(3, 2)) == MonomialIdeal(1, [(1,)])
    assert cartier_image(MonomialIdeal.unit(2), PrimePower(5, 1)).is_unit


def test_nu_set_chain_examples(cusp):
    x = MonomialIdeal(1, [(1,)])
    assert nu_set_chain(x, PrimePower(2, 2)) == {3}
    with pytest.raises(PreconditionError):
        nu_set_chain(MonomialIdeal.unit(2), PrimePower(2, 1))


def test_nu_set_chain_matches_grid(cusp):
    pp = PrimePower(2, 1)
    assert nu_set_chain(cusp, pp) == nu_set_grid(cusp, pp, default_grid(cusp))


def test_chain_budget(cusp):
    with pytest.raises(ResourceBudgetError):
        nu_set_chain(cusp, PrimePower(2, 5), budget=10)


def test_unrestricted_chain_extends(cusp):
    pp = PrimePower(3, 1)
    short = nu_set_chain(cusp, pp)
    longer = nu_set_chain_unrestricted(cusp, pp, 3 * 3)
    assert short == {n for n in longer if n < 2 * 3}


@pytest.mark.parametrize("p,e", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_dynamics(cusp, edges, p, e):
    assert dynamics_violations(cusp, PrimePower(p, e)) == []
    assert dynamics_violations(edges, PrimePower(p, e)) == []


@settings(max_examples=40, deadline=None)
@given(proper_ideals, st.sampled_from([2, 3]), st.integers(1, 2))
def test_dynamics_random(a, p, e):
    assert dynamics_violations(a, PrimePower(p, e)) == []


@settings(max_examples=60, deadline=None)
@given(small_ideals, small_ideals, st.sampled_from([2, 3, 5]), st.integers(1, 2))
def test_cartier_bracket_adjunction(I, J, p, e):
    """C^e(I) is contained in J exactly when I is contained in J^[p^e]."""
    pp = PrimePower(p, e)
    assert contains_ideal(J, cartier_image(I, pp)) == contains_ideal(bracket_power(J, pp.value), I)


@settings(max_examples=60, deadline=None)
@given(small_ideals, small_ideals, st.integers(1, 6))
def test_bracket_commutes_with_intersection(I, K, q):
    assert bracket_power(intersect(I, K), q) == intersect(bracket_power(I, q), bracket_power(K, q))


@settings(max_examples=40, deadline=None)
@given(small_ideals, st.integers(1, 4))
def test_bracket_member_agrees_with_bracket_power(J, q):
    power = bracket_power(J, q)
    for m in itertools.product(range(3 * q + 2), repeat=2):
        assert bracket_member(m, J, q) == contains_monomial(power, m)


@settings(max_examples=60, deadline=None)
@given(small_ideals, st.sampled_from([2, 3]), st.integers(1, 2), st.integers(1, 2))
def test_cartier_composition(I, p, e, f):
    twice = cartier_image(cartier_image(I, PrimePower(p, e)), PrimePower(p, f))
    assert twice == cartier_image(I, PrimePower(p, e + f))


@settings(max_examples=30, deadline=None)
@given(proper_ideals, st.sampled_from([2, 3]), st.integers(1, 2))
def test_chain_level_nesting(a, p, e):
    q = p ** e
    window = len(a) * q
    lower = nu_set_chain(a, PrimePower(p, e))
    for value in nu_set_chain(a, PrimePower(p, e + 1)):
        while value >= window:
            value -= q
        assert value in lower

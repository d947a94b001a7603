"""Tests for the exact integer program solver."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from errors import PreconditionError, ResourceBudgetError
from ilp import (
    INFEASIBLE,
    IlpResult,
    NuProblem,
    brute_force_maximize,
    maximize,
    optimum_value,
)


def random_problem(rng, max_dim=4, max_entry=5, max_cap=60, max_box=10**5):
    """A random problem with bounded columns whose box has at most max_box points."""
    while True:
        n = rng.randint(1, max_dim)
        r = rng.randint(1, max_dim)
        A = [[rng.randint(0, max_entry) for _ in range(r)] for _ in range(n)]
        for j in range(r):
            if all(row[j] == 0 for row in A):
                A[rng.randrange(n)][j] = rng.randint(1, max_entry)
        caps = [rng.randint(0, max_cap) for _ in range(n)]
        prob = NuProblem(A, caps)
        product = 1
        for b in prob.column_bounds():
            product *= b + 1
        if product <= max_box:
            return prob


@pytest.mark.parametrize("A,caps,value,witness", [
    ([[2, 0], [0, 3]], [9, 9], 7, (4, 3)),
    ([[1]], [6], 6, (6,)),
    ([[2, 1, 1], [1, 2, 1], [1, 1, 2]], [14, 14, 14], 10, None),
    ([[1, 1]], [0], 0, (0, 0)),
    ([[1, 0], [0, 1]], [2, 3], 5, (2, 3)),
])
def test_maximize_examples(A, caps, value, witness):
    result = maximize(NuProblem(A, caps))
    assert result.value == value
    if witness is not None:
        assert result.witness == witness
    assert brute_force_maximize(NuProblem(A, caps)) == result


@pytest.mark.parametrize("q", [2, 7, 10**12])
def test_single_variable(q):
    assert maximize(NuProblem([[1]], [q - 1])) == IlpResult(q - 1, (q - 1,))


def test_negative_cap_is_infeasible():
    prob = NuProblem([[1, 1], [1, 0]], [3, -1])
    assert maximize(prob) == INFEASIBLE
    assert not maximize(prob).feasible
    assert optimum_value(prob) is None
    assert brute_force_maximize(prob) == INFEASIBLE


def test_unbounded_column_rejected():
    with pytest.raises(PreconditionError):
        NuProblem([[1, 0]], [3]).column_bounds()
    with pytest.raises(PreconditionError):
        maximize(NuProblem([[1, 0]], [3]))


def test_malformed_problem_rejected():
    with pytest.raises(PreconditionError):
        NuProblem([[1, 2]], [1, 2])
    with pytest.raises(PreconditionError):
        NuProblem([[1, -2]], [1])
    with pytest.raises(PreconditionError):
        NuProblem([[1, 2], [1]], [1, 1])


def test_brute_force_budget():
    with pytest.raises(ResourceBudgetError):
        brute_force_maximize(NuProblem([[1, 1]], [10**5]))


def test_large_caps():
    """Caps like a_i p^e - 1 for large e stay exact."""
    q = 7 ** 20
    prob = NuProblem([[2, 0], [0, 3]], [q - 1, q - 1])
    assert maximize(prob).value == (q - 1) // 2 + (q - 1) // 3
    triangle = NuProblem([[2, 1, 1], [1, 2, 1], [1, 1, 2]], [3 * q - 1] * 3)
    # q = 7^20 is 1 mod 4
    assert optimum_value(triangle) == (9 * q - 5) // 4


def test_oracle_equivalence_corpus():
    rng = random.Random(20240611)
    for _ in range(1000):
        prob = random_problem(rng)
        fast = maximize(prob)
        slow = brute_force_maximize(prob)
        assert fast == slow, prob
        assert optimum_value(prob) == slow.value


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False))
def test_witness_is_feasible_and_optimal(rnd):
    prob = random_problem(rnd, max_dim=3, max_entry=4, max_cap=30)
    result = maximize(prob)
    assert prob.is_feasible(result.witness)
    assert sum(result.witness) == result.value


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_optimum_monotone_in_caps(rnd):
    prob = random_problem(rnd, max_dim=3, max_entry=4, max_cap=30)
    caps = list(prob.caps)
    caps[rnd.randrange(len(caps))] += rnd.randint(1, 10)
    assert optimum_value(NuProblem(prob.A, caps)) >= optimum_value(prob)


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 5))
def test_optimum_under_scaled_caps(rnd, q):
    # caps b - 1 against q * b - 1 with b >= 1
    prob = random_problem(rnd, max_dim=3, max_entry=4, max_cap=20)
    scaled = NuProblem(prob.A, [q * (c + 1) - 1 for c in prob.caps])
    base = optimum_value(prob)
    assert optimum_value(scaled) + 1 >= base + 1
    assert optimum_value(scaled) >= q * base

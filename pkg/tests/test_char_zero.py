"""Tests for characteristic-zero root recovery and the char-p comparison."""

from fractions import Fraction as F

import pytest

import char_zero
from char_zero import (
    AffineLaw,
    audit_law,
    candidate_moduli,
    char0_roots,
    compare_char_p,
    fit_affine_law,
)
from config import Char0Config, PipelineConfig
from conftest import CUSP_CHAR0, EDGES_CHAR0, TRIANGLE_CHAR0
from errors import PreconditionError
from monomial_core import MonomialIdeal
from nu_engine import GridSpec, witness_ideal

PLANE = MonomialIdeal(2, [(1, 0), (0, 1)])


def test_fit_triangle_law(triangle):
    law = fit_affine_law(triangle, witness_ideal((2, 2, 2)), 4, 5)
    assert law.slope == F(9, 4)
    assert law.intercept == F(-5, 4)
    assert law.validated_samples == 5
    assert law.evaluate(5) == 10


def test_fit_cusp_law(cusp):
    law = fit_affine_law(cusp, PLANE, 6, 7)
    assert law.slope == F(5, 6)
    assert law.intercept == F(-5, 6)
    assert audit_law(cusp, law, 3)


def test_fit_rejects_non_affine(cusp):
    # floor((q-1)/2) + floor((q-1)/3) is not affine on consecutive q
    assert fit_affine_law(cusp, PLANE, 1, 50) is None


def test_audit_catches_wrong_law(cusp):
    law = AffineLaw(PLANE, 6, F(5, 6), F(-1, 6), 7, 5)
    assert not audit_law(cusp, law, 2)


def test_fit_preconditions(cusp):
    with pytest.raises(PreconditionError):
        fit_affine_law(cusp, PLANE, 6, 7, samples=4)
    with pytest.raises(PreconditionError):
        fit_affine_law(cusp, PLANE, 6, 8)
    with pytest.raises(PreconditionError):
        fit_affine_law(cusp, PLANE, 0, 7)


def test_candidate_moduli(cusp):
    assert candidate_moduli(cusp, 4) == [1, 2, 3, 4]
    with pytest.raises(PreconditionError):
        candidate_moduli(MonomialIdeal.unit(2))
    with pytest.raises(PreconditionError):
        candidate_moduli(cusp, 0)


def test_char0_unit_root():
    result = char0_roots(MonomialIdeal(1, [(1,)]))
    assert result.roots == {F(-1)}
    assert result.witnesses[F(-1)].M == 1
    assert not result.grid_limited


@pytest.mark.slow
def test_char0_cusp(cusp):
    result = char0_roots(cusp)
    assert result.roots == CUSP_CHAR0
    assert not result.grid_limited
    witness = result.witnesses[F(-5, 6)]
    assert witness.J == PLANE
    assert witness.M == 6
    assert witness.slope == F(5, 6)


@pytest.mark.slow
def test_char0_edges(edges):
    assert char0_roots(edges).roots == EDGES_CHAR0


@pytest.mark.slow
def test_char0_triangle(triangle):
    result = char0_roots(triangle)
    assert result.roots == TRIANGLE_CHAR0
    assert result.witnesses[F(-5, 4)].M == 4


def test_small_modulus_cap_is_grid_limited(cusp):
    # every intercept with denominator 6 needs M = 6
    result = char0_roots(cusp, Char0Config(m_max=3))
    assert result.grid_limited
    assert F(-5, 6) not in result.roots
    assert all(law.M <= 3 for law in result.witnesses.values())


def test_enlarged_grid_flags_missing_intercepts(cusp, monkeypatch):
    # base grid c in {(1,1), (2,1), (1,2)}; doubling adds (1,3) and (2,2)
    monkeypatch.setattr(char_zero, "default_grid",
                        lambda a: GridSpec(degree_bound=1, per_variable_bound=(1, 1)))
    result = char0_roots(cusp)
    assert result.grid_limited
    assert result.roots == {F(-5, 6), F(-7, 6), F(-4, 3)}
    assert result.roots < CUSP_CHAR0


def test_enlarged_check_disabled_trusts_base_grid(cusp, monkeypatch):
    monkeypatch.setattr(char_zero, "default_grid",
                        lambda a: GridSpec(degree_bound=1, per_variable_bound=(1, 1)))
    result = char0_roots(cusp, Char0Config(enlarged_check=False))
    assert not result.grid_limited
    assert result.roots == {F(-5, 6), F(-7, 6), F(-4, 3)}


@pytest.mark.slow
def test_compare_cusp(cusp):
    report = compare_char_p(cusp, [2, 3, 5, 7])
    by_prime = {c.p: c for c in report.primes}
    assert by_prime[2].missing_in_char_p == {F(-5, 6), F(-7, 6), F(-3, 2)}
    assert by_prime[3].missing_in_char_p == {F(-5, 6), F(-7, 6), F(-4, 3), F(-5, 3)}
    assert by_prime[5].equal and by_prime[7].equal
    for comparison in report.primes:
        assert comparison.extra_in_char_p == set()
        assert comparison.zp_restriction_holds


@pytest.mark.slow
def test_compare_edges(edges):
    report = compare_char_p(edges, [2, 3, 11, 13])
    by_prime = {c.p: c for c in report.primes}
    assert by_prime[2].char_p == {F(-2)}
    assert all(by_prime[p].equal for p in (3, 11, 13))


@pytest.mark.slow
def test_compare_triangle(triangle):
    report = compare_char_p(triangle, [2, 3, 11, 13])
    by_prime = {c.p: c for c in report.primes}
    assert by_prime[2].char_p == {F(-1)}
    # every triangle root has a denominator prime to 3
    assert by_prime[3].missing_in_char_p == set()
    assert by_prime[3].equal
    assert by_prime[11].equal and by_prime[13].equal
    assert all(c.zp_restriction_holds for c in report.primes)


def test_compare_unit_root():
    x = MonomialIdeal(1, [(1,)])
    report = compare_char_p(x, [2, 3], PipelineConfig(levels=8))
    assert report.char_zero.roots == {F(-1)}
    assert all(c.equal and c.zp_restriction_holds for c in report.primes)


def test_compare_rejects_composite(cusp):
    with pytest.raises(PreconditionError):
        compare_char_p(cusp, [2, 9])

"""Shared fixtures: the worked-example ideals."""

from fractions import Fraction as F

import pytest

import ilp
from monomial_core import MonomialIdeal


@pytest.fixture(autouse=True)
def verify_witnesses(monkeypatch):
    monkeypatch.setattr(ilp, "VERIFY_WITNESSES", True)


@pytest.fixture
def cusp():
    """(x^2, y^3)"""
    return MonomialIdeal(2, [(2, 0), (0, 3)])


@pytest.fixture
def edges():
    """(xy, yz, xz)"""
    return MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])


@pytest.fixture
def triangle():
    """(x^2yz, xy^2z, xyz^2)"""
    return MonomialIdeal(3, [(2, 1, 1), (1, 2, 1), (1, 1, 2)])


CUSP_CHAR0 = {F(-5, 6), F(-7, 6), F(-4, 3), F(-3, 2), F(-5, 3), F(-2)}
TRIANGLE_CHAR0 = {F(-3, 4), F(-5, 4), F(-3, 2), F(-1)}
EDGES_CHAR0 = {F(-3, 2), F(-2)}

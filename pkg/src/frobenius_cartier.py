"""
Bracket (Frobenius) powers, Cartier images of monomial ideals, and the
Cartier-chain computation of level-e nu-invariant sets.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Set

from errors import PreconditionError, ResourceBudgetError
from monomial_core import MonomialIdeal, contains_monomial, multiply
from utils.number_utils import require_prime

logger = logging.getLogger(__name__)

DEFAULT_CHAIN_BUDGET = 10**5


@dataclass(frozen=True)
class PrimePower:
    """q = p^e with p prime and e >= 1."""

    p: int
    e: int

    def __post_init__(self):
        require_prime(self.p)
        if isinstance(self.e, bool) or not isinstance(self.e, int) or self.e < 1:
            raise PreconditionError(f"level e must be a positive integer, got {self.e!r}")

    @property
    def value(self) -> int:
        return self.p ** self.e

    def next_level(self) -> "PrimePower":
        return PrimePower(self.p, self.e + 1)


def _check_q(q: int) -> None:
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        raise PreconditionError(f"q must be a positive integer, got {q!r}")


def bracket_power(J: MonomialIdeal, q: int) -> MonomialIdeal:
    """
    The ideal J^[q] generated by q-th powers of the monomials of J.

    Args:
        J: Monomial ideal
        q: Positive integer, not necessarily a prime power

    Returns:
        J with every generator exponent scaled by q
    """
    _check_q(q)
    return MonomialIdeal(J.ambient_dim, [tuple(q * v for v in g) for g in J.generators])


def bracket_member(m: Sequence[int], J: MonomialIdeal, q: int) -> bool:
    """x^m lies in J^[q] iff x^floor(m/q) lies in J."""
    _check_q(q)
    return contains_monomial(J, tuple(v // q for v in m))


def cartier_image(I: MonomialIdeal, pp: PrimePower) -> MonomialIdeal:
    """
    The ideal C^e . I for a monomial ideal I.

    Writing x^u = (x^floor(u/p^e))^(p^e) * x^(u mod p^e), a monomial maps to
    x^floor(u/p^e); floors of the generators already generate the image.
    """
    q = pp.value
    return MonomialIdeal(I.ambient_dim, [tuple(v // q for v in g) for g in I.generators])


def _check_chain_input(a: MonomialIdeal) -> None:
    if a.is_zero or a.is_unit:
        raise PreconditionError("the nu-invariant chain needs a nonzero proper ideal")


def nu_set_chain_unrestricted(a: MonomialIdeal, pp: PrimePower, limit: int,
                              budget: int = DEFAULT_CHAIN_BUDGET) -> Set[int]:
    """
    Jumps n in [0, limit) of the chain C^e a^0 >= C^e a^1 >= ...

    Args:
        a: Nonzero proper monomial ideal
        pp: Level p^e
        limit: Exclusive upper end of the scanned range
        budget: Maximal number of chain steps

    Returns:
        The n with C^e a^n != C^e a^(n+1)
    """
    _check_chain_input(a)
    if limit > budget:
        raise ResourceBudgetError(f"chain of {limit} steps for {a!r} at p^e={pp.value}", bound=budget)

    jumps = set()
    current = MonomialIdeal.unit(a.ambient_dim)
    image = cartier_image(current, pp)
    for n in range(limit):
        current = multiply(current, a)
        next_image = cartier_image(current, pp)
        if next_image != image:
            jumps.add(n)
        image = next_image
    logger.debug("chain for %r at %d^%d: %d jumps below %d", a, pp.p, pp.e, len(jumps), limit)
    return jumps


def nu_set_chain(a: MonomialIdeal, pp: PrimePower, budget: int = DEFAULT_CHAIN_BUDGET) -> Set[int]:
    """
    Level-e nu-invariants of a below r*p^e, read off the Cartier chain.

    Only representatives in [0, r p^e) are produced: larger invariants
    reduce into this window by subtracting multiples of p^e.
    """
    _check_chain_input(a)
    return nu_set_chain_unrestricted(a, pp, len(a) * pp.value, budget)


def dynamics_violations(a: MonomialIdeal, pp: PrimePower,
                        budget: int = DEFAULT_CHAIN_BUDGET) -> List[int]:
    """
    Jumps n >= r p^e whose shift n - p^e is not a jump.

    The chain is scanned up to (r+1) p^e; the result is expected to be empty.
    """
    q = pp.value
    r = len(a)
    jumps = nu_set_chain_unrestricted(a, pp, (r + 1) * q, budget)
    return sorted(n for n in jumps if n >= r * q and n - q not in jumps)

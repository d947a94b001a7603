"""
Number-theoretic helpers shared by the p-adic, pipeline and CLI layers.
"""

import math
from functools import reduce
from typing import Iterable

from sympy import isprime
from sympy.ntheory import n_order

from errors import PreconditionError


def require_prime(p: int) -> int:
    """
    Validate that p is a prime number.

    Args:
        p: Candidate prime

    Returns:
        p itself

    Raises:
        PreconditionError: if p is not prime
    """
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise PreconditionError(f"{p!r} is not a prime")
    return p


def multiplicative_order(p: int, modulus: int) -> int:
    """Least d >= 1 with p^d = 1 mod modulus (modulus coprime to p)."""
    if modulus == 1:
        return 1
    if math.gcd(p, modulus) != 1:
        raise PreconditionError(f"{p} is not invertible modulo {modulus}")
    return int(n_order(p, modulus))


def levels_for(p: int, target: int) -> int:
    """Smallest E >= 1 with p^E >= target."""
    e, value = 1, p
    while value < target:
        e += 1
        value *= p
    return e


def lcm_all(values: Iterable[int]) -> int:
    return reduce(lambda x, y: x * y // math.gcd(x, y), values, 1)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)

"""
Exact arithmetic on monomials and monomial ideals.
A monomial is its exponent vector; an ideal is the antichain of its minimal generators.
"""

import logging
from typing import Iterable, List, Sequence, Tuple

from errors import DimensionError, PreconditionError

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]


def as_monomial(exponents: Iterable[int]) -> Monomial:
    """
    Normalize an exponent sequence to a Monomial.

    Args:
        exponents: Nonnegative integers

    Returns:
        The exponents as a tuple

    Raises:
        PreconditionError: if an entry is negative or not an integer
    """
    mono = tuple(exponents)
    for value in mono:
        if isinstance(value, bool) or not isinstance(value, int):
            raise PreconditionError(f"exponent {value!r} is not an integer")
        if value < 0:
            raise PreconditionError(f"negative exponent {value} in {mono}")
    return mono


def _check_lengths(m1: Sequence[int], m2: Sequence[int]) -> None:
    if len(m1) != len(m2):
        raise DimensionError(f"monomials of lengths {len(m1)} and {len(m2)}")


def total_degree(m: Sequence[int]) -> int:
    return sum(m)


def support(m: Sequence[int]) -> frozenset:
    """Indices of the variables occurring in m."""
    return frozenset(i for i, value in enumerate(m) if value > 0)


def lcm(m1: Sequence[int], m2: Sequence[int]) -> Monomial:
    _check_lengths(m1, m2)
    return tuple(max(a, b) for a, b in zip(m1, m2))


def divides(m1: Sequence[int], m2: Sequence[int]) -> bool:
    """True iff m1 <= m2 componentwise, i.e. x^m1 divides x^m2."""
    _check_lengths(m1, m2)
    return all(a <= b for a, b in zip(m1, m2))


def _minimal_antichain(gens: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    # Sorted by degree, a candidate can only be divided by an earlier survivor.
    kept: List[Monomial] = []
    for mono in sorted(set(gens), key=lambda g: (sum(g), g)):
        if not any(all(a <= b for a, b in zip(k, mono)) for k in kept):
            kept.append(mono)
    return tuple(sorted(kept, reverse=True))


class MonomialIdeal:
    """
    An ideal of Z[x_1, ..., x_n] generated by monomials.

    Generators are minimalized on construction, so two ideals are equal
    exactly when their generator tuples are equal. Instances are immutable.
    """

    __slots__ = ("_n", "_gens")

    def __init__(self, ambient_dim: int, generators: Iterable[Iterable[int]] = ()):
        """
        Initialize the ideal.

        Args:
            ambient_dim: Number of variables n (positive)
            generators: Exponent vectors of length n; need not be minimal
        """
        if isinstance(ambient_dim, bool) or not isinstance(ambient_dim, int) or ambient_dim < 1:
            raise PreconditionError(f"ambient dimension must be a positive integer, got {ambient_dim!r}")
        monos = [as_monomial(g) for g in generators]
        for mono in monos:
            if len(mono) != ambient_dim:
                raise DimensionError(
                    f"generator {mono} has length {len(mono)}, expected {ambient_dim}"
                )
        object.__setattr__(self, "_n", ambient_dim)
        object.__setattr__(self, "_gens", _minimal_antichain(monos))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def unit(cls, ambient_dim: int) -> "MonomialIdeal":
        return cls(ambient_dim, [(0,) * ambient_dim])

    @classmethod
    def zero(cls, ambient_dim: int) -> "MonomialIdeal":
        return cls(ambient_dim, [])

    @property
    def ambient_dim(self) -> int:
        return self._n

    @property
    def generators(self) -> Tuple[Monomial, ...]:
        return self._gens

    @property
    def is_zero(self) -> bool:
        return not self._gens

    @property
    def is_unit(self) -> bool:
        return self._gens == ((0,) * self._n,)

    @property
    def max_degree(self) -> int:
        """Largest total degree of a minimal generator (0 for the zero ideal)."""
        return max((total_degree(g) for g in self._gens), default=0)

    def __len__(self) -> int:
        return len(self._gens)

    def __iter__(self):
        return iter(self._gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._n == other._n and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self._n, self._gens))

    def __repr__(self) -> str:
        return f"MonomialIdeal({self._n}, {[list(g) for g in self._gens]})"

    def __reduce__(self):
        return (MonomialIdeal, (self._n, self._gens))


def _check_dims(I: MonomialIdeal, K: MonomialIdeal) -> None:
    if I.ambient_dim != K.ambient_dim:
        raise DimensionError(f"ideals in {I.ambient_dim} and {K.ambient_dim} variables")


def contains_monomial(I: MonomialIdeal, m: Sequence[int]) -> bool:
    """True iff some generator of I divides m."""
    if len(m) != I.ambient_dim:
        raise DimensionError(f"monomial of length {len(m)} in an ideal of dimension {I.ambient_dim}")
    return any(all(a <= b for a, b in zip(g, m)) for g in I.generators)


def contains_ideal(I: MonomialIdeal, K: MonomialIdeal) -> bool:
    """True iff K is contained in I."""
    _check_dims(I, K)
    return all(contains_monomial(I, g) for g in K.generators)


def minimalize(gens: Iterable[Iterable[int]], ambient_dim: int = None) -> MonomialIdeal:
    """
    Reduce a generating set to its minimal antichain.

    Args:
        gens: Exponent vectors of equal length
        ambient_dim: Needed only when gens is empty

    Returns:
        The ideal the vectors generate
    """
    monos = [as_monomial(g) for g in gens]
    if ambient_dim is None:
        if not monos:
            raise PreconditionError("ambient dimension required for an empty generator set")
        ambient_dim = len(monos[0])
    return MonomialIdeal(ambient_dim, monos)


def multiply(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    _check_dims(I, K)
    products = [tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in K.generators]
    return MonomialIdeal(I.ambient_dim, products)


def intersect(I: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    """Intersection of monomial ideals, generated by pairwise lcms."""
    _check_dims(I, K)
    return MonomialIdeal(I.ambient_dim, [lcm(g, h) for g in I.generators for h in K.generators])


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """
    Minimal generators of I^s.

    Multiplies by I one step at a time, minimalizing after each step.
    """
    if s < 0:
        raise PreconditionError(f"negative power {s}")
    result = MonomialIdeal.unit(I.ambient_dim)
    for _ in range(s):
        result = multiply(result, I)
    return result


def radical_contains(J: MonomialIdeal, a: MonomialIdeal) -> bool:
    """
    Whether a lies in the radical of J.

    Holds iff every generator f of a is divisible by the support of some
    generator of J.
    """
    _check_dims(J, a)
    if J.is_unit:
        raise PreconditionError("J must be a proper ideal")
    supports = [support(v) for v in J.generators]
    return all(any(s <= support(f) for s in supports) for f in a.generators)


def is_irreducible(J: MonomialIdeal) -> bool:
    """True iff every generator is a pure power of a single variable."""
    return all(len(support(g)) == 1 for g in J.generators)


def irreducible_decomposition(J: MonomialIdeal) -> List[MonomialIdeal]:
    """
    Irredundant decomposition of J into ideals generated by pure powers.

    Splits a mixed generator x^u = x_i^{u_i} * x^{u - u_i e_i} through
    (rest, x^u) = (rest, x_i^{u_i}) intersected with (rest, x^{u - u_i e_i})
    until only pure powers remain, then drops components containing another.

    Args:
        J: A nonzero proper monomial ideal

    Returns:
        Components sorted by their generator tuples
    """
    if J.is_zero or J.is_unit:
        raise PreconditionError("irreducible decomposition needs a nonzero proper ideal")
    n = J.ambient_dim
    pending = [J]
    components = set()
    while pending:
        current = pending.pop()
        mixed = next((g for g in current.generators if len(support(g)) > 1), None)
        if mixed is None:
            components.add(current)
            continue
        i = min(support(mixed))
        rest = [g for g in current.generators if g != mixed]
        pure = tuple(mixed[i] if k == i else 0 for k in range(n))
        cofactor = tuple(0 if k == i else mixed[k] for k in range(n))
        pending.append(MonomialIdeal(n, rest + [pure]))
        pending.append(MonomialIdeal(n, rest + [cofactor]))

    irredundant = [
        K for K in components
        if not any(L != K and contains_ideal(K, L) for L in components)
    ]
    logger.debug("decomposed %r into %d components", J, len(irredundant))
    return sorted(irredundant, key=lambda K: K.generators)

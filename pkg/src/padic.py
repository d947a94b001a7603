"""
p-adic digit arithmetic for rationals in Z_(p).

Digits are stored little-endian: digit i is the coefficient of p^i.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from errors import PreconditionError
from utils.number_utils import require_prime

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Rational:
    """Reduced rational from an int, a Fraction or a string such as "-5/4"."""
    try:
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise PreconditionError(f"not a rational number: {value!r}") from e


def in_zp(x: RationalLike, p: int) -> bool:
    """True iff the reduced denominator of x is coprime to p."""
    return to_rational(x).denominator % p != 0


def _check_digits(digits: Sequence[int], p: int) -> None:
    for digit in digits:
        if isinstance(digit, bool) or not isinstance(digit, int) or not 0 <= digit < p:
            raise PreconditionError(f"digit {digit!r} outside [0, {p - 1}]")


@dataclass(frozen=True)
class PAdicBranch:
    """The first len(digits) base-p digits of a p-adic integer."""

    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "digits", tuple(self.digits))
        _check_digits(self.digits, self.p)

    @property
    def level(self) -> int:
        return len(self.digits)

    def residue(self) -> int:
        """The residue modulo p^level the digits spell out."""
        return sum(d * self.p ** i for i, d in enumerate(self.digits))


@dataclass(frozen=True)
class PeriodicExpansion:
    """Digits preperiod, then period repeated forever; the period is minimal."""

    p: int
    preperiod: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        require_prime(self.p)
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise PreconditionError("period must be nonempty")
        _check_digits(self.preperiod, self.p)
        _check_digits(self.period, self.p)
        d = len(self.period)
        for shorter in range(1, d):
            if d % shorter == 0 and self.period == self.period[:shorter] * (d // shorter):
                raise PreconditionError(f"period {self.period} repeats a block of length {shorter}")

    def digits(self, length: int) -> Tuple[int, ...]:
        """The first length digits of the expansion."""
        k = len(self.preperiod)
        return tuple(
            self.preperiod[i] if i < k else self.period[(i - k) % len(self.period)]
            for i in range(length)
        )


def digits_of_int(value: int, p: int, e: int) -> Tuple[int, ...]:
    """Base-p digits of value mod p^e."""
    value %= p ** e
    digits = []
    for _ in range(e):
        value, digit = divmod(value, p)
        digits.append(digit)
    return tuple(digits)


def residue_tree(level_sets: Sequence[Iterable[int]], p: int) -> List[PAdicBranch]:
    """
    Maximal-depth branches of the residue tree.

    Level e (1-based) holds the residues mod p^e of level_sets[e-1]; a node
    at level e+1 hangs below its reduction mod p^e when that reduction is a
    node of level e.

    Args:
        level_sets: Integer sets for e = 1..E
        p: The prime

    Returns:
        Depth-E branches sorted by digits; empty (with a warning) when some
        level has no residues
    """
    require_prime(p)
    if not level_sets:
        raise PreconditionError("residue tree needs at least one level")
    frontier: Set[int] = set()
    for e, values in enumerate(level_sets, start=1):
        modulus = p ** e
        residues = {v % modulus for v in values}
        if not residues:
            logger.warning("level %d has no nu-invariants; no roots detectable", e)
            return []
        if e > 1:
            parent = p ** (e - 1)
            residues = {rho for rho in residues if rho % parent in frontier}
        frontier = residues
        if not frontier:
            logger.info("residue tree dies out at level %d", e)
            return []
    depth = len(level_sets)
    return sorted(
        (PAdicBranch(p, digits_of_int(rho, p, depth)) for rho in frontier),
        key=lambda branch: branch.digits,
    )


def detect_period(branch: PAdicBranch, max_preperiod: int, max_period: int) -> Optional[PeriodicExpansion]:
    """
    Find the least period d, and for it the least preperiod k, explaining the digits.

    The pattern must repeat at least three times after position k.

    Raises:
        PreconditionError: if the branch is shorter than max_preperiod + 3 * max_period
    """
    digits = branch.digits
    length = len(digits)
    if length < max_preperiod + 3 * max_period:
        raise PreconditionError(
            f"branch of length {length} too short for preperiod {max_preperiod} "
            f"and period {max_period}"
        )
    for d in range(1, max_period + 1):
        for k in range(max_preperiod + 1):
            if length - k < 3 * d:
                break
            if all(digits[i] == digits[i + d] for i in range(k, length - d)):
                return PeriodicExpansion(branch.p, digits[:k], digits[k:k + d])
    return None


def rational_from_expansion(exp: PeriodicExpansion) -> Rational:
    """Sum of the preperiod digits plus p^k * V / (1 - p^d), V the period as an integer."""
    p = exp.p
    head = sum(a * p ** i for i, a in enumerate(exp.preperiod))
    block = sum(b * p ** i for i, b in enumerate(exp.period))
    return Fraction(head) + Fraction(p ** len(exp.preperiod) * block, 1 - p ** len(exp.period))


def digits_of_rational(x: RationalLike, p: int, e: int) -> PAdicBranch:
    """
    The first e p-adic digits of x.

    Raises:
        PreconditionError: if p divides the denominator of x
    """
    require_prime(p)
    x = to_rational(x)
    if not in_zp(x, p):
        raise PreconditionError(f"{x} not in Z_({p})")
    modulus = p ** e
    residue = x.numerator * pow(x.denominator, -1, modulus) % modulus
    return PAdicBranch(p, digits_of_int(residue, p, e))


def split_root(alpha: RationalLike, p: int, d: int) -> Tuple[int, Rational, int]:
    """
    Write alpha = m + p^t * gamma with 0 <= m < p^t and -1 <= gamma <= 0.

    t runs over the multiples of d and the least admissible one is used;
    gamma then has a purely periodic expansion.

    Returns:
        (m, gamma, t)
    """
    require_prime(p)
    alpha = to_rational(alpha)
    if not in_zp(alpha, p):
        raise PreconditionError(f"{alpha} not in Z_({p})")
    if d < 1:
        raise PreconditionError(f"d must be positive, got {d}")
    for j in count(1):
        t = j * d
        modulus = p ** t
        m = alpha.numerator * pow(alpha.denominator, -1, modulus) % modulus
        gamma = (alpha - m) / modulus
        if -1 <= gamma <= 0:
            return m, gamma, t

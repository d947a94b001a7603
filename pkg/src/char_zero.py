"""
Characteristic-zero Bernstein-Sato roots of monomial ideals.

For q = 1 mod M large enough, nu^J_a(q) = beta * q + eta with eta a root of
the Bernstein-Sato polynomial. Laws are fitted over the witness grid and the
intercepts collected; the comparison with characteristic p checks whether
the char-p roots are exactly the char-0 roots lying in Z_(p).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from bs_pipeline import bs_roots
from config import Char0Config, PipelineConfig
from errors import PreconditionError
from monomial_core import MonomialIdeal, radical_contains
from nu_engine import compute_nu, default_grid, iter_grid, witness_ideal
from padic import Rational, in_zp
from utils.number_utils import ceil_div, lcm_all, require_prime
from utils.progress_utils import sweep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineLaw:
    """nu^J_a(q) = slope * q + intercept for q = 1 mod M, q >= q0."""

    J: MonomialIdeal
    M: int
    slope: Rational
    intercept: Rational
    q0: int
    validated_samples: int

    def evaluate(self, q: int) -> Rational:
        return self.slope * q + self.intercept


@dataclass(frozen=True)
class Char0Result:
    """Roots with their witnessing laws; grid_limited marks dropped candidates."""

    witnesses: Dict[Rational, AffineLaw]
    grid_limited: bool = False

    @property
    def roots(self) -> Set[Rational]:
        return set(self.witnesses)


@dataclass(frozen=True)
class PrimeComparison:
    p: int
    char_p: Set[Rational]
    char_zero: Set[Rational]
    missing_in_char_p: Set[Rational]
    extra_in_char_p: Set[Rational]
    zp_restriction_holds: bool

    @property
    def equal(self) -> bool:
        return self.char_p == self.char_zero


@dataclass(frozen=True)
class ComparisonReport:
    char_zero: Char0Result
    primes: Tuple[PrimeComparison, ...] = ()


def _start(M: int, q_min: int) -> int:
    return 1 + M * ceil_div(q_min, M)


def fit_affine_law(a: MonomialIdeal, J: MonomialIdeal, M: int, q_start: int,
                   samples: int = 5) -> Optional[AffineLaw]:
    """
    Fit nu^J_a(q) = beta q + eta on q = q_start + i M.

    Slope and intercept come from the first two samples; every remaining
    sample must agree.

    Args:
        a: Nonzero proper monomial ideal
        J: Monomial ideal containing a in its radical
        M: Modulus of the progression
        q_start: First sample, 1 mod M
        samples: Number of samples (at least 5)

    Returns:
        The validated law with a positive slope, or None
    """
    if M < 1:
        raise PreconditionError(f"modulus must be positive, got {M}")
    if samples < 5:
        raise PreconditionError(f"an affine law needs at least 5 samples, got {samples}")
    if q_start < 1 or q_start % M != 1 % M:
        raise PreconditionError(f"q_start {q_start} is not 1 mod {M}")

    qs = [q_start + i * M for i in range(samples)]
    first = compute_nu(a, J, qs[0])
    second = compute_nu(a, J, qs[1])
    slope = Fraction(second - first, M)
    if slope <= 0:
        return None
    intercept = first - slope * qs[0]
    for q in qs[2:]:
        if compute_nu(a, J, q) != slope * q + intercept:
            return None
    return AffineLaw(J, M, slope, intercept, q_start, samples)


def audit_law(a: MonomialIdeal, law: AffineLaw, extra: int) -> bool:
    """Re-check a law on extra fresh samples beyond those used to fit it."""
    start = law.q0 + law.validated_samples * law.M
    return all(
        compute_nu(a, law.J, q) == law.evaluate(q)
        for q in (start + i * law.M for i in range(extra))
    )


def candidate_moduli(a: MonomialIdeal, m_max: int = 60) -> List[int]:
    """Trial moduli 1..m_max, increasing (divisor-closed)."""
    if a.is_zero or a.is_unit:
        raise PreconditionError("a must be a nonzero proper ideal")
    if m_max < 1:
        raise PreconditionError(f"m_max must be positive, got {m_max}")
    return list(range(1, m_max + 1))


def _universal_intercept(args: Tuple[MonomialIdeal, Tuple[int, ...], int, int, int, int]) -> Optional[Rational]:
    a, b, modulus, q_start, samples, audit = args
    J = witness_ideal(b)
    if not radical_contains(J, a):
        return None
    law = fit_affine_law(a, J, modulus, q_start, samples)
    if law is None or not audit_law(a, law, audit):
        return None
    return law.intercept


def _least_modulus(a: MonomialIdeal, J: MonomialIdeal, intercept: Rational,
                   moduli: Sequence[int], config: Char0Config) -> Optional[AffineLaw]:
    for M in moduli:
        law = fit_affine_law(a, J, M, _start(M, config.q_min), config.samples)
        if law is not None and law.intercept == intercept and audit_law(a, law, config.audit_samples):
            return law
    return None


def char0_roots(a: MonomialIdeal, config: Optional[Char0Config] = None) -> Char0Result:
    """
    Intercepts of validated affine laws over the witness grid.

    Laws are fitted first on the progression modulo the lcm of all candidate
    moduli, where every grid ideal follows a single law. Each intercept keeps
    its first witness in grid order (smallest total degree) and is reported
    with the least candidate modulus on which the same law validates.

    The sweep also covers the grid scaled by grid_scale + 1 (the base grid is
    its prefix). The result is grid-limited when the enlarged grid shows an
    intercept the base grid misses, or when an intercept has no validating
    modulus and is dropped.
    """
    config = config or Char0Config()
    moduli = candidate_moduli(a, config.m_max)
    universal = lcm_all(moduli)
    q_start = _start(universal, config.q_min)
    base = default_grid(a).scaled(config.grid_scale)
    base_points = set(iter_grid(base))
    sweep_grid = default_grid(a).scaled(config.grid_scale + 1) if config.enlarged_check else base
    points = list(iter_grid(sweep_grid))
    logger.info("char0_roots for %r: %d grid ideals (%d in the base grid), modulus %d",
                a, len(points), len(base_points), universal)

    intercepts = sweep(
        _universal_intercept,
        [(a, b, universal, q_start, config.samples, config.audit_samples) for b in points],
        jobs=config.jobs,
        desc="affine laws",
        progress=config.progress,
    )
    first_witness: Dict[Rational, MonomialIdeal] = {}
    enlarged: Set[Rational] = set()
    for b, eta in zip(points, intercepts):
        if eta is None:
            continue
        enlarged.add(eta)
        if b in base_points and eta not in first_witness:
            first_witness[eta] = witness_ideal(b)

    grid_limited = False
    unseen = enlarged - set(first_witness)
    if unseen:
        logger.warning("enlarged grid finds intercepts %s missing from the base grid",
                       sorted(unseen))
        grid_limited = True

    witnesses: Dict[Rational, AffineLaw] = {}
    for eta in sorted(first_witness):
        law = _least_modulus(a, first_witness[eta], eta, moduli, config)
        if law is None:
            logger.warning("intercept %s has no law modulo M <= %d; dropped", eta, config.m_max)
            grid_limited = True
            continue
        witnesses[eta] = law
    return Char0Result(witnesses, grid_limited)


def compare_char_p(a: MonomialIdeal, primes: Sequence[int],
                   pipeline_config: Optional[PipelineConfig] = None,
                   char0_config: Optional[Char0Config] = None) -> ComparisonReport:
    """
    Char-p root sets next to the char-0 one, prime by prime.

    zp_restriction_holds records whether the char-p roots are exactly the
    char-0 roots lying in Z_(p); it is an observation, never assumed.
    """
    for p in primes:
        require_prime(p)
    zero = char0_roots(a, char0_config)
    comparisons = []
    for p in primes:
        char_p = bs_roots(a, p, pipeline_config).roots
        restricted = {root for root in zero.roots if in_zp(root, p)}
        comparisons.append(PrimeComparison(
            p=p,
            char_p=char_p,
            char_zero=zero.roots,
            missing_in_char_p=zero.roots - char_p,
            extra_in_char_p=char_p - zero.roots,
            zp_restriction_holds=char_p == restricted,
        ))
        if char_p != restricted:
            logger.warning("p=%d: char-p roots differ from the char-0 roots in Z_(%d)", p, p)
    return ComparisonReport(zero, tuple(comparisons))

"""
Characteristic-p Bernstein-Sato roots of monomial ideals.

The pipeline computes nu-invariant level sets for e = 1..E, keeps the
residues that stay compatible across levels, reads a rational off every
eventually periodic branch and finally tries to certify each rational with
an affine pattern nu^J(p^(ed)) = beta * p^(ed) + alpha.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Set, Tuple

from config import PipelineConfig
from errors import ConsistencyError, PreconditionError, ResourceBudgetError
from frobenius_cartier import PrimePower, nu_set_chain
from monomial_core import MonomialIdeal, radical_contains
from nu_engine import GridSpec, compute_nu, default_grid, iter_grid, nu_set_grid, witness_ideal
from padic import (
    PAdicBranch,
    Rational,
    RationalLike,
    detect_period,
    in_zp,
    rational_from_expansion,
    residue_tree,
    split_root,
    to_rational,
)
from utils.number_utils import levels_for, multiplicative_order, require_prime

logger = logging.getLogger(__name__)


class RootStatus(str, Enum):
    CERTIFIED = "certified"
    PERIODIC = "periodic-uncertified"
    UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Certificate:
    """
    Evidence nu^J_a(p^(e d)) = beta * p^(e d) + alpha at the sampled exponents e.

    residue and tail record alpha = residue + p^t * tail with -1 <= tail <= 0,
    t the least multiple of d admitting it.
    """

    J: MonomialIdeal
    d: int
    beta: Rational
    exponents: Tuple[int, ...]
    residue: int
    tail: Rational
    t: int


@dataclass(frozen=True)
class RootEntry:
    value: Optional[Rational]
    status: RootStatus
    digits: Tuple[int, ...]
    certificate: Optional[Certificate] = None


@dataclass(frozen=True)
class RootReport:
    p: int
    level_reached: int
    entries: Tuple[RootEntry, ...]

    @property
    def roots(self) -> Set[Rational]:
        """Certified and periodic-uncertified roots."""
        return {entry.value for entry in self.entries if entry.status != RootStatus.UNRESOLVED}

    @property
    def certified(self) -> Set[Rational]:
        return {entry.value for entry in self.entries if entry.status == RootStatus.CERTIFIED}

    @property
    def unresolved(self) -> List[Tuple[int, ...]]:
        return [entry.digits for entry in self.entries if entry.status == RootStatus.UNRESOLVED]


def default_levels(p: int, config: PipelineConfig) -> int:
    """Depth E: the least E with p^E >= target_modulus, at least min_levels."""
    if config.levels is not None:
        return config.levels
    return max(levels_for(p, config.target_modulus), config.min_levels)


def find_d(alpha: RationalLike, p: int) -> int:
    """Least d >= 1 with alpha * (p^d - 1) an integer."""
    alpha = to_rational(alpha)
    if not in_zp(alpha, p):
        raise PreconditionError(f"{alpha} not in Z_({p})")
    return multiplicative_order(p, alpha.denominator)


def _first_exponent(p: int, d: int, q_min: int) -> int:
    e = 1
    while p ** (e * d) < q_min:
        e += 1
    return e


def _matches(a: MonomialIdeal, J: MonomialIdeal, alpha: Rational,
             qs: List[int]) -> Optional[Rational]:
    """Slope beta when nu^J_a(q) = beta q + alpha holds at every q in qs."""
    nu_first = compute_nu(a, J, qs[0])
    nu_second = compute_nu(a, J, qs[1])
    beta = Fraction(nu_second - nu_first, qs[1] - qs[0])
    if beta <= 0 or beta * qs[0] + alpha != nu_first:
        return None
    for q in qs[2:]:
        if beta * q + alpha != compute_nu(a, J, q):
            return None
    return beta


def certify_root(a: MonomialIdeal, p: int, alpha: RationalLike, grid: GridSpec,
                 samples: int = 3, max_d: int = 20, q_min: int = 50) -> Optional[Certificate]:
    """
    Search the witness grid for an affine pattern through alpha.

    Tries d = find_d(alpha, p) and its multiples up to max_d. For each d the
    levels q = p^(e d) run over `samples` consecutive e, starting at the least
    e with p^(e d) >= q_min. Slopes come from the first two samples and are
    checked on the rest.

    Args:
        a: Nonzero proper monomial ideal
        p: The prime
        alpha: Negative rational in Z_(p)
        grid: Witness grid to search, in grid order
        samples: Number of sampled exponents (at least 2)
        max_d: Cap on d
        q_min: Smallest sampled level

    Returns:
        The first certificate found, or None
    """
    require_prime(p)
    alpha = to_rational(alpha)
    if not in_zp(alpha, p):
        raise PreconditionError(f"{alpha} not in Z_({p})")
    if alpha >= 0:
        raise PreconditionError(f"root candidate {alpha} is not negative")
    if samples < 2:
        raise PreconditionError("certification needs at least two samples")

    d0 = find_d(alpha, p)
    candidates = [J for J in map(witness_ideal, iter_grid(grid)) if radical_contains(J, a)]
    for d in range(d0, max_d + 1, d0):
        start = _first_exponent(p, d, q_min)
        exponents = tuple(range(start, start + samples))
        qs = [p ** (e * d) for e in exponents]
        for J in candidates:
            beta = _matches(a, J, alpha, qs)
            if beta is not None:
                residue, tail, t = split_root(alpha, p, d)
                logger.debug("certified %s at p=%d with d=%d, beta=%s, J=%r", alpha, p, d, beta, J)
                return Certificate(J, d, beta, exponents, residue, tail, t)
    logger.info("no certificate for %s at p=%d with d <= %d", alpha, p, max_d)
    return None


def _level_set(a: MonomialIdeal, pp: PrimePower, grid: GridSpec, config: PipelineConfig) -> Set[int]:
    if config.method == "chain":
        return nu_set_chain(a, pp, config.chain_budget)

    values = nu_set_grid(a, pp, grid, jobs=config.jobs, progress=config.progress)
    check = config.method == "both" or (
        config.cross_check and pp.e <= 2 and len(a) * pp.value <= config.cross_check_steps
    )
    if check:
        chain = nu_set_chain(a, pp, config.chain_budget)
        if chain != values:
            raise ConsistencyError(
                f"grid and chain level sets differ at {pp.p}^{pp.e}: "
                f"grid only {sorted(values - chain)}, chain only {sorted(chain - values)}"
            )
    return values


def _clamped_periodicity(levels: int, config: PipelineConfig) -> Tuple[int, int]:
    preperiod = min(config.max_preperiod, max(1, levels // 4))
    period = min(config.max_period, (levels - preperiod) // 3)
    return preperiod, period


def _resolve(a: MonomialIdeal, branch: PAdicBranch, grid: GridSpec, preperiod: int,
             period: int, config: PipelineConfig) -> RootEntry:
    if period < 1:
        return RootEntry(None, RootStatus.UNRESOLVED, branch.digits)
    expansion = detect_period(branch, preperiod, period)
    if expansion is None:
        return RootEntry(None, RootStatus.UNRESOLVED, branch.digits)
    alpha = rational_from_expansion(expansion)
    if alpha >= 0:
        logger.info("periodic branch %s gives nonnegative %s; left unresolved", branch.digits, alpha)
        return RootEntry(None, RootStatus.UNRESOLVED, branch.digits)
    if not config.certify:
        return RootEntry(alpha, RootStatus.PERIODIC, branch.digits)
    certificate = certify_root(a, branch.p, alpha, grid, samples=config.samples,
                               max_d=config.max_d, q_min=config.q_min)
    status = RootStatus.CERTIFIED if certificate is not None else RootStatus.PERIODIC
    return RootEntry(alpha, status, branch.digits, certificate)


def _level_sets(a: MonomialIdeal, p: int, grid: GridSpec, config: PipelineConfig,
                start: int, stop: int) -> List[Set[int]]:
    """Level sets for e = start..stop."""
    level_sets = []
    pp = PrimePower(p, start)
    for e in range(start, stop + 1):
        try:
            level_sets.append(_level_set(a, pp, grid, config))
        except ResourceBudgetError as exc:
            raise ResourceBudgetError(f"level set at {p}^{e}", bound=exc.bound, level=e - 1) from exc
        logger.debug("level %d: %d nu-invariants", e, len(level_sets[-1]))
        pp = pp.next_level()
    return level_sets


def _aperiodic(branches: List[PAdicBranch], levels: int, config: PipelineConfig) -> int:
    """Branches with no detectable period at this depth."""
    preperiod, period = _clamped_periodicity(levels, config)
    if period < 1:
        return len(branches)
    return sum(detect_period(branch, preperiod, period) is None for branch in branches)


def bs_roots(a: MonomialIdeal, p: int, config: Optional[PipelineConfig] = None) -> RootReport:
    """
    Bernstein-Sato roots of a in characteristic p detectable at depth E.

    With the default depth, a branch whose period the shallow digits cannot
    show triggers one deepening to max_preperiod + 3 * max_period levels, the
    depth at which every admissible period is searched.

    Args:
        a: Nonzero proper monomial ideal
        p: The prime
        config: Pipeline options (defaults when None)

    Returns:
        RootReport with resolved roots sorted by value, then unresolved branches

    Raises:
        ResourceBudgetError: carrying the level reached
        ConsistencyError: if a cross-check of level sets fails
    """
    config = config or PipelineConfig()
    require_prime(p)
    if a.is_zero or a.is_unit:
        raise PreconditionError("a must be a nonzero proper ideal")

    levels = default_levels(p, config)
    grid = default_grid(a).scaled(config.grid_scale)
    logger.info("bs_roots for %r at p=%d with %d levels", a, p, levels)

    level_sets = _level_sets(a, p, grid, config, 1, levels)
    branches = residue_tree(level_sets, p)

    full_depth = config.max_preperiod + 3 * config.max_period
    if config.levels is None and config.extend_levels and levels < full_depth:
        missing = _aperiodic(branches, levels, config)
        if missing:
            logger.info("%d branches without a period at level %d; deepening to %d",
                        missing, levels, full_depth)
            try:
                deeper = level_sets + _level_sets(a, p, grid, config, levels + 1, full_depth)
            except ResourceBudgetError as exc:
                logger.warning("deepening stopped: %s", exc)
            else:
                level_sets, levels = deeper, full_depth
                branches = residue_tree(level_sets, p)

    preperiod, period = _clamped_periodicity(levels, config)
    entries = [_resolve(a, branch, grid, preperiod, period, config) for branch in branches]
    resolved = sorted((x for x in entries if x.value is not None), key=lambda x: x.value)
    unresolved = [x for x in entries if x.value is None]
    if unresolved:
        logger.info("%d branches unresolved at level %d", len(unresolved), levels)
    return RootReport(p, levels, tuple(resolved + unresolved))

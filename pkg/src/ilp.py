"""
Exact maximization of sum(beta) over nonnegative integer vectors with A beta <= caps.

Every nu-invariant reduces to one such problem. Instances are tiny in the
number of columns but caps grow like p^e, so the solver bounds with the
rational LP relaxation (exact simplex over Fractions) instead of enumerating
values.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from errors import PreconditionError, ResourceBudgetError

logger = logging.getLogger(__name__)

# Set by the test suite: re-check every witness returned by maximize.
VERIFY_WITNESSES = False

BRUTE_FORCE_VARIABLE_LIMIT = 10**4
BRUTE_FORCE_PRODUCT_LIMIT = 10**7


@dataclass(frozen=True)
class NuProblem:
    """
    The integer program max sum_j beta_j subject to A beta <= caps, beta >= 0.

    A is stored row-wise: A[i][j] is the exponent of variable i in generator j.
    """

    A: Tuple[Tuple[int, ...], ...]
    caps: Tuple[int, ...]

    def __post_init__(self):
        A = tuple(tuple(row) for row in self.A)
        caps = tuple(self.caps)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "caps", caps)
        if len(A) != len(caps):
            raise PreconditionError(f"{len(A)} constraint rows but {len(caps)} caps")
        widths = {len(row) for row in A}
        if len(widths) > 1:
            raise PreconditionError("constraint rows of unequal length")
        for row in A:
            if any(isinstance(v, bool) or not isinstance(v, int) or v < 0 for v in row):
                raise PreconditionError(f"constraint row {row} must hold nonnegative integers")
        if any(isinstance(c, bool) or not isinstance(c, int) for c in caps):
            raise PreconditionError("caps must be integers")

    @property
    def num_rows(self) -> int:
        return len(self.A)

    @property
    def num_cols(self) -> int:
        return len(self.A[0]) if self.A else 0

    def column_bounds(self) -> Tuple[int, ...]:
        """
        Per-column bounds min_i floor(c_i / a_ij) over the positive entries.

        Raises:
            PreconditionError: if some column has no positive entry
        """
        bounds = []
        for j in range(self.num_cols):
            limits = [c // row[j] for row, c in zip(self.A, self.caps) if row[j] > 0]
            if not limits:
                raise PreconditionError(f"column {j} is unbounded (no positive entry)")
            bounds.append(min(limits))
        return tuple(bounds)

    def is_feasible(self, beta: Sequence[int]) -> bool:
        if len(beta) != self.num_cols or any(b < 0 for b in beta):
            return False
        return all(sum(a * b for a, b in zip(row, beta)) <= c for row, c in zip(self.A, self.caps))


@dataclass(frozen=True)
class IlpResult:
    """Optimum and its witness; both None for an infeasible problem."""

    value: Optional[int]
    witness: Optional[Tuple[int, ...]]

    @property
    def feasible(self) -> bool:
        return self.value is not None


INFEASIBLE = IlpResult(None, None)


def _lp_relaxation(rows: List[Sequence[int]], rhs: List[int], ncols: int,
                   max_pivots: int) -> Optional[Tuple[Fraction, List[Fraction]]]:
    """
    Solve max sum(y) s.t. rows . y <= rhs, y >= 0 exactly (rhs >= 0).

    Tableau simplex from the slack basis with Bland's rule.

    Returns:
        (optimal value, optimal y), or None when the pivot limit is reached
    """
    m = len(rows)
    width = ncols + m
    tableau = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        line = [Fraction(v) for v in row] + [Fraction(0)] * m + [Fraction(b)]
        line[ncols + i] = Fraction(1)
        tableau.append(line)
    objective = [Fraction(-1)] * ncols + [Fraction(0)] * (m + 1)
    basis = [ncols + i for i in range(m)]

    for _ in range(max_pivots):
        enter = next((j for j in range(width) if objective[j] < 0), None)
        if enter is None:
            break
        leave = None
        best_ratio = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[i] < basis[leave])):
                    best_ratio, leave = ratio, i
        if leave is None:
            raise PreconditionError("LP relaxation is unbounded")

        pivot_row = tableau[leave]
        pivot = pivot_row[enter]
        if pivot != 1:
            pivot_row = [v / pivot for v in pivot_row]
            tableau[leave] = pivot_row
        for i in range(m):
            factor = tableau[i][enter]
            if i != leave and factor:
                tableau[i] = [a - factor * b for a, b in zip(tableau[i], pivot_row)]
        factor = objective[enter]
        objective = [a - factor * b for a, b in zip(objective, pivot_row)]
        basis[leave] = enter
    else:
        return None

    y = [Fraction(0)] * ncols
    for i, var in enumerate(basis):
        if var < ncols:
            y[var] = tableau[i][-1]
    return objective[-1], y


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _branch_and_bound(prob: NuProblem) -> Tuple[int, Tuple[int, ...]]:
    """Optimal value and one optimal vector (not necessarily lex-smallest)."""
    A, caps = prob.A, prob.caps
    r = prob.num_cols
    if r == 0:
        return 0, ()
    root_hi = list(prob.column_bounds())
    max_pivots = 50 * (prob.num_rows + 2 * r)

    best_value = 0
    best = (0,) * r
    stack = [([0] * r, root_hi)]
    nodes = 0
    while stack:
        lo, hi = stack.pop()
        nodes += 1
        if any(l > h for l, h in zip(lo, hi)):
            continue
        residual = [c - sum(a * l for a, l in zip(row, lo)) for row, c in zip(A, caps)]
        if any(res < 0 for res in residual):
            continue

        # Box constraints enter the relaxation only when tighter than the rows imply.
        rows = [list(row) for row in A]
        rhs = list(residual)
        span = []
        for j in range(r):
            implied = min(Fraction(res, row[j]) for row, res in zip(A, residual) if row[j] > 0)
            width = min(hi[j] - lo[j], _floor(implied))
            span.append(width)
            if width < implied:
                rows.append([1 if k == j else 0 for k in range(r)])
                rhs.append(width)

        base = sum(lo)
        relaxed = _lp_relaxation(rows, rhs, r, max_pivots)
        if relaxed is None:
            logger.debug("degenerate relaxation at node %d; using the trivial bound", nodes)
            bound = base + sum(span)
            y = None
        else:
            value, y = relaxed
            bound = base + _floor(value)
        if bound <= best_value:
            continue

        # Rounding down stays feasible because A is nonnegative; then fill greedily.
        candidate = list(lo) if y is None else [l + _floor(v) for l, v in zip(lo, y)]
        slack = [c - sum(a * x for a, x in zip(row, candidate)) for row, c in zip(A, caps)]
        for j in range(r):
            room = hi[j] - candidate[j]
            for row, s in zip(A, slack):
                if row[j] > 0:
                    room = min(room, s // row[j])
            if room > 0:
                candidate[j] += room
                slack = [s - row[j] * room for row, s in zip(A, slack)]
        if sum(candidate) > best_value:
            best_value, best = sum(candidate), tuple(candidate)
        if best_value >= bound:
            continue

        if y is not None:
            j = next((k for k, v in enumerate(y) if v.denominator != 1), None)
            if j is None:
                continue
            split = lo[j] + _floor(y[j])
        else:
            j = next(k for k in range(r) if lo[k] < hi[k])
            split = (lo[j] + hi[j]) // 2
        up_lo = list(lo)
        up_lo[j] = split + 1
        down_hi = list(hi)
        down_hi[j] = split
        stack.append((up_lo, list(hi)))
        stack.append((list(lo), down_hi))

    logger.debug("branch and bound: %d nodes, optimum %d", nodes, best_value)
    return best_value, best


def optimum_value(prob: NuProblem) -> Optional[int]:
    """Optimal value only (None if infeasible); skips the witness search."""
    if any(c < 0 for c in prob.caps):
        return None
    return _branch_and_bound(prob)[0]


def _restricted(A: Sequence[Sequence[int]], caps: Sequence[int], start: int, cap_first: int) -> NuProblem:
    """Columns start.. of A, with an extra row bounding the first of them."""
    rows = [tuple(row[start:]) for row in A]
    extra = tuple(1 if k == 0 else 0 for k in range(len(A[0]) - start))
    return NuProblem(tuple(rows) + (extra,), tuple(caps) + (cap_first,))


def maximize(prob: NuProblem) -> IlpResult:
    """
    Exact optimum with the lexicographically smallest optimal witness.

    Args:
        prob: Problem whose columns all have a positive entry

    Returns:
        IlpResult; INFEASIBLE when some cap is negative
    """
    if any(c < 0 for c in prob.caps):
        return INFEASIBLE
    target = _branch_and_bound(prob)[0]
    r = prob.num_cols

    witness = []
    caps = list(prob.caps)
    remaining = target
    for j in range(r):
        if j == r - 1:
            witness.append(remaining)
            break
        lo, hi = 0, min(remaining, NuProblem(tuple(row[j:] for row in prob.A), tuple(caps)).column_bounds()[0])
        while lo < hi:
            mid = (lo + hi) // 2
            if optimum_value(_restricted(prob.A, caps, j, mid)) >= remaining:
                hi = mid
            else:
                lo = mid + 1
        witness.append(lo)
        caps = [c - row[j] * lo for row, c in zip(prob.A, caps)]
        remaining -= lo

    result = IlpResult(target, tuple(witness))
    if VERIFY_WITNESSES:
        assert prob.is_feasible(result.witness) and sum(result.witness) == result.value, result
    return result


def brute_force_maximize(prob: NuProblem) -> IlpResult:
    """
    Same contract as maximize, by enumerating every feasible vector.

    Raises:
        ResourceBudgetError: if a column bound exceeds 10^4 or their product 10^7
    """
    if any(c < 0 for c in prob.caps):
        return INFEASIBLE
    bounds = prob.column_bounds()
    product = 1
    for b in bounds:
        if b > BRUTE_FORCE_VARIABLE_LIMIT:
            raise ResourceBudgetError(f"column bound {b} too large for enumeration",
                                      bound=BRUTE_FORCE_VARIABLE_LIMIT)
        product *= b + 1
    if product > BRUTE_FORCE_PRODUCT_LIMIT:
        raise ResourceBudgetError(f"{product} candidate vectors", bound=BRUTE_FORCE_PRODUCT_LIMIT)

    r = prob.num_cols
    best_value = -1
    best = None
    prefix = [0] * r

    def descend(j: int, slack: List[int], total: int):
        nonlocal best_value, best
        if j == r:
            if total > best_value:
                best_value, best = total, tuple(prefix)
            return
        limit = bounds[j]
        for row, s in zip(prob.A, slack):
            if row[j] > 0:
                limit = min(limit, s // row[j])
        column = [row[j] for row in prob.A]
        for v in range(limit + 1):
            prefix[j] = v
            descend(j + 1, [s - a * v for a, s in zip(column, slack)], total + v)
        prefix[j] = 0

    descend(0, list(prob.caps), 0)
    return IlpResult(best_value, best)

"""
nu-invariants of monomial ideals.

nu^J_a(q) = max{n >= 0 : a^n not contained in J^[q]} is computed by
splitting J into irreducible components and solving one integer program per
component. Level sets are swept over the grid of witness ideals
J = (x_1^(b_1+1), ..., x_n^(b_n+1)).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from errors import PreconditionError, ResourceBudgetError
from frobenius_cartier import PrimePower, bracket_power
from ilp import NuProblem, optimum_value
from monomial_core import (
    MonomialIdeal,
    contains_monomial,
    irreducible_decomposition,
    is_irreducible,
    radical_contains,
    support,
)
from utils.progress_utils import sweep

logger = logging.getLogger(__name__)

DEFAULT_BRUTE_BUDGET = 10**4


class GridSpec(BaseModel):
    """Bounds on the witness monomials x^b enumerated by the grid."""

    model_config = ConfigDict(frozen=True)

    degree_bound: int = Field(ge=1)
    per_variable_bound: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bounds(self):
        for bound in self.per_variable_bound:
            if bound < 0 or bound > self.degree_bound:
                raise ValueError(
                    f"per-variable bound {bound} outside [0, {self.degree_bound}]"
                )
        return self

    def scaled(self, factor: int) -> "GridSpec":
        return GridSpec(
            degree_bound=self.degree_bound * factor,
            per_variable_bound=tuple(b * factor for b in self.per_variable_bound),
        )


@dataclass(frozen=True)
class NuQuery:
    """A validated request for nu^J_a(q)."""

    a: MonomialIdeal
    J: MonomialIdeal
    q: int

    def __post_init__(self):
        if self.a.ambient_dim != self.J.ambient_dim:
            raise PreconditionError(
                f"a lives in {self.a.ambient_dim} variables but J in {self.J.ambient_dim}"
            )
        if self.a.is_zero or self.a.is_unit:
            raise PreconditionError("a must be a nonzero proper ideal")
        if self.J.is_unit or self.J.is_zero:
            raise PreconditionError("J must be a nonzero proper ideal")
        if isinstance(self.q, bool) or not isinstance(self.q, int) or self.q < 1:
            raise PreconditionError(f"q must be a positive integer, got {self.q!r}")
        if not radical_contains(self.J, self.a):
            raise PreconditionError("J does not contain a in its radical")


@lru_cache(maxsize=4096)
def _components(J: MonomialIdeal) -> Tuple[MonomialIdeal, ...]:
    return tuple(irreducible_decomposition(J))


def component_problem(a: MonomialIdeal, component: MonomialIdeal, q: int) -> NuProblem:
    """
    The integer program behind nu^K_a(q) for an irreducible K.

    Rows are the variables x_i of K with caps q * c_i - 1, where x_i^c_i
    generates K; column j holds the exponents of the j-th generator of a.
    """
    if component.is_zero or not is_irreducible(component):
        raise PreconditionError(f"{component!r} is not generated by pure powers")
    rows = []
    caps = []
    for gen in component.generators:
        (i,) = support(gen)
        rows.append(tuple(f[i] for f in a.generators))
        caps.append(q * gen[i] - 1)
    return NuProblem(tuple(rows), tuple(caps))


def nu(query: NuQuery) -> int:
    """
    Compute nu^J_a(q) exactly.

    Args:
        query: Validated (a, J, q)

    Returns:
        The largest n with a^n not contained in J^[q]; the maximum over the
        irreducible components of J
    """
    return max(
        optimum_value(component_problem(query.a, component, query.q))
        for component in _components(query.J)
    )


def compute_nu(a: MonomialIdeal, J: MonomialIdeal, q: int) -> int:
    return nu(NuQuery(a, J, q))


def nu_brute(query: NuQuery, budget: int = DEFAULT_BRUTE_BUDGET) -> int:
    """
    nu^J_a(q) by scanning n = 0, 1, 2, ...

    Keeps a generating set of a^n reduced to the generators outside J^[q]
    (products of members of J^[q] stay inside), and stops at the first n
    where none is left.

    Raises:
        ResourceBudgetError: if the guaranteed stopping point r*q*max exponent
            of J exceeds the budget
    """
    a, J, q = query.a, query.J, query.q
    max_exponent = max(max(g) for g in J.generators)
    limit = len(a) * q * max_exponent
    if limit > budget:
        raise ResourceBudgetError(f"brute-force scan of {limit} powers", bound=budget)

    target = bracket_power(J, q)
    outside = {(0,) * a.ambient_dim}
    for n in range(limit + 1):
        outside = {
            tuple(u + v for u, v in zip(m, g))
            for m in outside
            for g in a.generators
        }
        outside = {m for m in outside if not contains_monomial(target, m)}
        if not outside:
            return n
    raise ResourceBudgetError("scan did not terminate", bound=budget)


def witness_ideal(b: Sequence[int]) -> MonomialIdeal:
    """J = (x_1^(b_1+1), ..., x_n^(b_n+1)), the ideal of monomials not dividing x^b."""
    n = len(b)
    return MonomialIdeal(n, [tuple(b[i] + 1 if k == i else 0 for k in range(n)) for i in range(n)])


def default_grid(a: MonomialIdeal) -> GridSpec:
    """
    Grid with degree bound D*(r+1), D the largest generator degree of a.

    Generators of C^e a^m have degree at most floor(D m / p^e) < D r for
    m < r p^e; the extra D covers the boundary m = r p^e.
    """
    if a.is_zero or a.is_unit:
        raise PreconditionError("a must be a nonzero proper ideal")
    bound = a.max_degree * (len(a) + 1)
    return GridSpec(degree_bound=bound, per_variable_bound=(bound,) * a.ambient_dim)


def _compositions(total: int, caps: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    """Vectors b with sum total and b_i <= caps[i], in lexicographic order."""
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    rest_capacity = sum(caps[1:])
    for first in range(max(0, total - rest_capacity), min(caps[0], total) + 1):
        for tail in _compositions(total - first, caps[1:]):
            yield (first,) + tail


def iter_grid(grid: GridSpec) -> Iterator[Tuple[int, ...]]:
    """Witness exponents b ordered by total degree, then lexicographically."""
    for total in range(grid.degree_bound + 1):
        yield from _compositions(total, grid.per_variable_bound)


def _grid_nu(args: Tuple[MonomialIdeal, Tuple[int, ...], int]) -> Optional[int]:
    a, b, q = args
    J = witness_ideal(b)
    if not radical_contains(J, a):
        return None
    return compute_nu(a, J, q)


def nu_table(a: MonomialIdeal, q: int, grid: GridSpec, jobs: int = 1,
             progress: bool = False) -> Dict[int, List[MonomialIdeal]]:
    """
    Reverse index nu -> witnessing grid ideals (in grid order) at level q.

    Raises:
        PreconditionError: if no grid ideal contains a in its radical
    """
    if a.is_zero or a.is_unit:
        raise PreconditionError("a must be a nonzero proper ideal")
    if len(grid.per_variable_bound) != a.ambient_dim:
        raise PreconditionError("grid dimension does not match the ideal")
    points = list(iter_grid(grid))
    values = sweep(_grid_nu, [(a, b, q) for b in points], jobs=jobs,
                   desc=f"nu grid q={q}", progress=progress)
    table: Dict[int, List[MonomialIdeal]] = {}
    for b, value in zip(points, values):
        if value is not None:
            table.setdefault(value, []).append(witness_ideal(b))
    if not table:
        raise PreconditionError("no grid ideal contains a in its radical")
    return table


def nu_set_grid(a: MonomialIdeal, pp: PrimePower, grid: GridSpec, jobs: int = 1,
                progress: bool = False) -> Set[int]:
    """
    Level-e nu-invariants below r*p^e obtained from the grid of witness ideals.

    Args:
        a: Nonzero proper monomial ideal
        pp: Level p^e
        grid: Witness grid (see default_grid)
        jobs: Worker processes for the sweep
        progress: Show a progress bar

    Returns:
        {nu^J_a(p^e) : J in the grid} intersected with [0, r p^e)
    """
    q = pp.value
    window = len(a) * q
    table = nu_table(a, q, grid, jobs=jobs, progress=progress)
    return {value for value in table if value < window}

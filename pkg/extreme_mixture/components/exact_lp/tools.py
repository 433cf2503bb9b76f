"""
Exact LP Tools

Two-phase primal simplex over fractions.Fraction with Bland's rule, plus the
small helpers the geometric components build their programs with.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ...errors import InputError
from .models import (
    Constraint,
    LinearProgram,
    LpOutcome,
    LpStatus,
    Relation,
    Sense,
    VariableBound,
)

logger = logging.getLogger("extreme_mixture.exact_lp")

ZERO = Fraction(0)
ONE = Fraction(1)

_FLIPPED = {Relation.LE: Relation.GE, Relation.GE: Relation.LE, Relation.EQ: Relation.EQ}


class _Tableau:
    """Dense simplex tableau; row 0 holds reduced costs and -z in its last entry."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis
        self.objective: List[Fraction] = []

    def price(self, cost: Sequence[Fraction]) -> None:
        objective = list(cost) + [ZERO]
        for row, var in zip(self.rows, self.basis):
            c = cost[var]
            if c:
                objective = [a - c * b for a, b in zip(objective, row)]
        self.objective = objective

    def pivot(self, r: int, c: int) -> None:
        pivot_row = self.rows[r]
        piv = pivot_row[c]
        pivot_row = [x / piv for x in pivot_row]
        self.rows[r] = pivot_row
        for i, row in enumerate(self.rows):
            factor = row[c]
            if i != r and factor:
                self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]
        factor = self.objective[c]
        if factor:
            self.objective = [a - factor * b for a, b in zip(self.objective, pivot_row)]
        self.basis[r] = c

    def run(self, allowed: int) -> LpStatus:
        """Minimize the priced objective; only columns < allowed may enter."""
        iterations = 0
        while True:
            entering = next(
                (j for j in range(allowed) if self.objective[j] < 0), None
            )
            if entering is None:
                logger.debug(f"simplex optimal after {iterations} pivots")
                return LpStatus.OPTIMAL
            leaving = None
            best: Optional[Tuple[Fraction, int]] = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best:
                        best, leaving = key, i
            if leaving is None:
                logger.debug(f"simplex unbounded in column {entering}")
                return LpStatus.UNBOUNDED
            self.pivot(leaving, entering)
            iterations += 1

    @property
    def value(self) -> Fraction:
        return -self.objective[-1]


def _standardize(lp: LinearProgram):
    """Rewrite lp over nonnegative columns.

    Returns the rows (coefficients, relation, rhs), the column costs, the
    objective constant and, per original variable, (offset, [(column, sign)]).
    """
    bounds = lp.bounds or tuple(VariableBound() for _ in range(lp.num_variables))
    mapping: List[Tuple[Fraction, Tuple[Tuple[int, int], ...]]] = []
    upper_rows: List[Tuple[int, Fraction]] = []
    ncols = 0
    for bound in bounds:
        if bound.lower is not None:
            mapping.append((bound.lower, ((ncols, 1),)))
            if bound.upper is not None:
                upper_rows.append((ncols, bound.upper - bound.lower))
            ncols += 1
        elif bound.upper is not None:
            mapping.append((bound.upper, ((ncols, -1),)))
            ncols += 1
        else:
            mapping.append((ZERO, ((ncols, 1), (ncols + 1, -1))))
            ncols += 2

    sign = ONE if lp.sense is Sense.MIN else -ONE
    cost = [ZERO] * ncols
    constant = ZERO
    for c_j, (offset, cols) in zip(lp.objective, mapping):
        constant += c_j * offset
        for col, s in cols:
            cost[col] += sign * c_j * s

    rows: List[Tuple[List[Fraction], Relation, Fraction]] = []
    for constraint in dict.fromkeys(lp.constraints):
        coeffs = [ZERO] * ncols
        rhs = constraint.rhs
        for a_j, (offset, cols) in zip(constraint.coefficients, mapping):
            if not a_j:
                continue
            rhs -= a_j * offset
            for col, s in cols:
                coeffs[col] += a_j * s
        rows.append((coeffs, constraint.relation, rhs))
    for col, width in upper_rows:
        coeffs = [ZERO] * ncols
        coeffs[col] = ONE
        rows.append((coeffs, Relation.LE, width))
    return rows, cost, constant, mapping


def solve_lp(lp: LinearProgram) -> LpOutcome:
    """
    Solve a linear program exactly.

    Args:
        lp: The program; all comparisons are exact rational comparisons.

    Returns:
        LpOutcome with status optimal (value and point), infeasible or unbounded.
        Identical programs always yield identical outcomes.
    """
    if not isinstance(lp, LinearProgram):
        raise InputError("solve_lp expects a LinearProgram")
    rows, cost, _, mapping = _standardize(lp)
    ncols = len(cost)

    normalized = []
    for coeffs, relation, rhs in rows:
        if rhs < 0:
            coeffs, rhs, relation = [-a for a in coeffs], -rhs, _FLIPPED[relation]
        normalized.append((coeffs, relation, rhs))

    n_slack = sum(1 for _, rel, _ in normalized if rel is not Relation.EQ)
    n_art = sum(1 for _, rel, _ in normalized if rel is not Relation.LE)
    width = ncols + n_slack + n_art
    first_art = ncols + n_slack

    table: List[List[Fraction]] = []
    basis: List[int] = []
    slack = ncols
    art = first_art
    for coeffs, relation, rhs in normalized:
        row = coeffs + [ZERO] * (n_slack + n_art) + [rhs]
        if relation is Relation.LE:
            row[slack] = ONE
            basis.append(slack)
            slack += 1
        else:
            if relation is Relation.GE:
                row[slack] = -ONE
                slack += 1
            row[art] = ONE
            basis.append(art)
            art += 1
        table.append(row)

    tableau = _Tableau(table, basis)
    if n_art:
        tableau.price([ZERO] * first_art + [ONE] * n_art)
        tableau.run(width)
        if tableau.value > 0:
            logger.debug("phase one left a positive artificial sum: infeasible")
            return LpOutcome(status=LpStatus.INFEASIBLE)
        keep = []
        for r in range(len(tableau.rows)):
            if tableau.basis[r] < first_art:
                keep.append(r)
                continue
            col = next((j for j in range(first_art) if tableau.rows[r][j]), None)
            if col is None:
                continue
            tableau.pivot(r, col)
            keep.append(r)
        tableau.rows = [tableau.rows[r] for r in keep]
        tableau.basis = [tableau.basis[r] for r in keep]

    tableau.price(cost + [ZERO] * (width - ncols))
    if tableau.run(first_art) is LpStatus.UNBOUNDED:
        return LpOutcome(status=LpStatus.UNBOUNDED)

    columns = [ZERO] * width
    for row, var in zip(tableau.rows, tableau.basis):
        columns[var] = row[-1]
    point = tuple(
        offset + sum((s * columns[col] for col, s in cols), ZERO)
        for offset, cols in mapping
    )
    value = sum((c * x for c, x in zip(lp.objective, point)), ZERO)
    return LpOutcome(status=LpStatus.OPTIMAL, value=value, point=point)


def find_feasible(
    constraints: Sequence[Constraint],
    bounds: Sequence[VariableBound] = (),
    num_variables: Optional[int] = None,
) -> Optional[Tuple[Fraction, ...]]:
    """
    Find a point satisfying every constraint exactly.

    Returns:
        A feasible point, or None iff the system is infeasible.
    """
    if num_variables is None:
        if constraints:
            num_variables = len(constraints[0].coefficients)
        elif bounds:
            num_variables = len(bounds)
        else:
            raise InputError("cannot infer the number of variables")
    outcome = solve_lp(
        make_lp([ZERO] * num_variables, constraints=constraints, bounds=bounds)
    )
    return outcome.point if outcome.is_optimal else None


def make_lp(
    objective: Sequence,
    sense: Sense = Sense.MIN,
    constraints: Sequence[Constraint] = (),
    bounds: Sequence[VariableBound] = (),
) -> LinearProgram:
    """Build a LinearProgram, turning pydantic errors into InputError."""
    try:
        return LinearProgram(
            objective=tuple(objective),
            sense=sense,
            constraints=tuple(constraints),
            bounds=tuple(bounds),
        )
    except ValueError as e:
        raise InputError(str(e)) from e


def dual_of(lp: LinearProgram) -> LinearProgram:
    """
    Build the dual of a program over nonnegative variables.

    min c.x, Ax (rel) b, x >= 0  becomes  max b.y, A^T y <= c, with y_i >= 0
    for >= rows, y_i <= 0 for <= rows and y_i free for = rows. The max form
    maps symmetrically.
    """
    if lp.bounds and any(b != VariableBound() for b in lp.bounds):
        raise InputError("dual_of only handles programs over nonnegative variables")
    minimize = lp.sense is Sense.MIN
    sign_of: Dict[Relation, VariableBound] = {
        Relation.GE: VariableBound(lower=ZERO) if minimize else VariableBound(lower=None, upper=ZERO),
        Relation.LE: VariableBound(lower=None, upper=ZERO) if minimize else VariableBound(lower=ZERO),
        Relation.EQ: VariableBound(lower=None, upper=None),
    }
    rows = list(dict.fromkeys(lp.constraints))
    dual_rows = [
        Constraint(
            coefficients=tuple(row.coefficients[j] for row in rows),
            relation=Relation.LE if minimize else Relation.GE,
            rhs=lp.objective[j],
        )
        for j in range(lp.num_variables)
    ]
    return LinearProgram(
        objective=tuple(row.rhs for row in rows),
        sense=Sense.MAX if minimize else Sense.MIN,
        constraints=tuple(dual_rows),
        bounds=tuple(sign_of[row.relation] for row in rows),
    )


def satisfies(point: Sequence[Fraction], constraint: Constraint) -> bool:
    lhs = sum((a * x for a, x in zip(constraint.coefficients, point)), ZERO)
    if constraint.relation is Relation.LE:
        return lhs <= constraint.rhs
    if constraint.relation is Relation.GE:
        return lhs >= constraint.rhs
    return lhs == constraint.rhs

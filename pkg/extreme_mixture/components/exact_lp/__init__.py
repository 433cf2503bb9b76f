"""Exact rational linear programming kernel."""

from .models import (
    FREE,
    Constraint,
    LinearProgram,
    LpOutcome,
    LpStatus,
    Relation,
    Sense,
    VariableBound,
    eq,
    ge,
    le,
)
from .tools import dual_of, find_feasible, make_lp, satisfies, solve_lp
from .linalg import nullspace_vector, rank, solve_linear_system

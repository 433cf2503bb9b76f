"""
Linear program records

Variables default to the nonnegative orthant: an LP with no bounds listed
has every variable in [0, inf).
"""

from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from pydantic import model_validator

from ...rational import FrozenModel, Rational, Vector


class Sense(str, Enum):
    MIN = "min"
    MAX = "max"


class Relation(str, Enum):
    LE = "<="
    EQ = "="
    GE = ">="


class Constraint(FrozenModel):
    coefficients: Vector
    relation: Relation
    rhs: Rational


class VariableBound(FrozenModel):
    lower: Optional[Rational] = Fraction(0)
    upper: Optional[Rational] = None


FREE = VariableBound(lower=None, upper=None)


class LinearProgram(FrozenModel):
    objective: Vector
    sense: Sense = Sense.MIN
    constraints: Tuple[Constraint, ...] = ()
    bounds: Tuple[VariableBound, ...] = ()

    @model_validator(mode="after")
    def _check_dimensions(self) -> "LinearProgram":
        n = len(self.objective)
        for i, row in enumerate(self.constraints):
            if len(row.coefficients) != n:
                raise ValueError(
                    f"constraint {i} has {len(row.coefficients)} coefficients, expected {n}"
                )
        if self.bounds and len(self.bounds) != n:
            raise ValueError(f"{len(self.bounds)} bounds given for {n} variables")
        return self

    @property
    def num_variables(self) -> int:
        return len(self.objective)


class LpStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class LpOutcome(FrozenModel):
    status: LpStatus
    value: Optional[Rational] = None
    point: Optional[Vector] = None

    @model_validator(mode="after")
    def _check_payload(self) -> "LpOutcome":
        if (self.status is LpStatus.OPTIMAL) != (self.point is not None and self.value is not None):
            raise ValueError("value and point are present exactly for optimal outcomes")
        return self

    @property
    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def le(coefficients: Sequence, rhs) -> Constraint:
    return Constraint(coefficients=tuple(coefficients), relation=Relation.LE, rhs=rhs)


def ge(coefficients: Sequence, rhs) -> Constraint:
    return Constraint(coefficients=tuple(coefficients), relation=Relation.GE, rhs=rhs)


def eq(coefficients: Sequence, rhs) -> Constraint:
    return Constraint(coefficients=tuple(coefficients), relation=Relation.EQ, rhs=rhs)

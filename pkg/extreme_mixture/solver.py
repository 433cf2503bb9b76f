"""
Extreme Mixture Solver

Solves: minimize W_0 over mixtures of atoms subject to W_j <= d_j, returning
an optimal mixture of at most J+1 atoms. The main branch runs the stages in
order: optimal value, Pareto point, hyperplane certificate, minimal face,
Carathéodory decomposition, lift back to atoms.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from pydantic import model_validator

from .components.caratheodory import Decomposition, decompose
from .components.instance_model import (
    INCONSISTENT,
    Inconsistent,
    Instance,
    Mixture,
    dirac,
    evaluate,
    finite_points,
    is_feasible,
    restrict_objective,
)
from .components.pareto_face import (
    Certificate,
    fs_certificate,
    minimal_face,
    optimal_value,
    pareto_point,
    preimage,
)
from .errors import InvariantViolation, NoLiftFound, PreconditionError
from .rational import ExtReal, FrozenModel, Rational, Vector, is_inf

logger = logging.getLogger("extreme_mixture.solver")


class Branch(str, Enum):
    MAIN = "main"
    DEGENERATE_J0 = "degenerate_j0"
    DEGENERATE_RECURSIVE = "degenerate_recursive"


class Solution(FrozenModel):
    mixture: Mixture
    value: ExtReal
    certificate: Optional[Certificate] = None
    branch: Branch
    decomposition: Optional[Decomposition] = None
    w_star: Optional[Vector] = None
    modified_value: Optional[Rational] = None

    @model_validator(mode="after")
    def _check_branch(self) -> "Solution":
        if self.branch is Branch.MAIN:
            if self.certificate is None or self.w_star is None:
                raise ValueError("main-branch solutions carry a certificate and a Pareto point")
            if tuple(self.certificate.w_star) != tuple(self.w_star):
                raise ValueError("certificate point differs from w_star")
            if self.value != self.w_star[0]:
                raise ValueError(f"value {self.value} differs from W_0(w_star) = {self.w_star[0]}")
            if len(self.mixture) > len(self.w_star):
                raise ValueError(f"support {len(self.mixture)} exceeds J+1 = {len(self.w_star)}")
            return self
        if not is_inf(self.value):
            raise ValueError(f"degenerate branch with finite value {self.value}")
        if self.certificate is not None:
            raise ValueError("degenerate-branch solutions carry no certificate")
        if self.branch is Branch.DEGENERATE_J0 and len(self.mixture) != 1:
            raise ValueError("a J = 0 degenerate solution is a single atom")
        if self.branch is Branch.DEGENERATE_RECURSIVE and self.modified_value is None:
            raise ValueError("recursive degenerate solutions record the modified value")
        return self


def lift(instance: Instance, w) -> int:
    """Lowest atom id whose (fully finite) cost vector equals w."""
    ids = preimage(instance, w)
    if not ids:
        raise NoLiftFound(f"no atom realizes the performance vector {tuple(w)}")
    return ids[0]


def _solve_main(instance: Instance, value: Fraction) -> Solution:
    w_star = pareto_point(instance)
    points = finite_points(instance)
    certificate = fs_certificate(points, w_star)
    face = minimal_face(points, w_star)
    if face != certificate.active:
        raise InvariantViolation(f"certificate face {certificate.active} differs from minimal face {face}")
    decomposition = decompose({i: points[i] for i in face}, w_star)

    support = {}
    for atom_id, weight in decomposition.parts:
        lifted = lift(instance, points[atom_id])
        support[lifted] = support.get(lifted, Fraction(0)) + weight
    mixture = Mixture(support=tuple(sorted(support.items())))

    if len(mixture) > instance.J + 1:
        raise InvariantViolation(f"support {len(mixture)} exceeds J+1 = {instance.J + 1}")
    if evaluate(instance, mixture) != w_star:
        raise InvariantViolation("lifted mixture does not reproduce the Pareto point")
    if not is_feasible(instance, mixture) or w_star[0] != value:
        raise InvariantViolation("lifted mixture is not optimal and feasible")
    logger.info(f"main branch: value {value}, support {len(mixture)}, {certificate.k} planes")
    return Solution(
        mixture=mixture,
        value=value,
        certificate=certificate,
        branch=Branch.MAIN,
        decomposition=decomposition,
        w_star=w_star,
    )


def degenerate_solve(instance: Instance) -> Solution:
    """
    Solve a consistent instance whose feasible mixtures all have W_0 = inf.

    With J = 0 the lowest-id atom is optimal. Otherwise W_1 is minimized
    subject to the remaining constraints; that optimum is finite, at most
    d_1, and therefore feasible and optimal for the original problem.
    """
    value = optimal_value(instance)
    if not (isinstance(value, float) and is_inf(value)):
        raise PreconditionError(f"degenerate_solve needs optimal value inf, got {value!r}")
    if instance.J == 0:
        logger.info("degenerate branch with J = 0: any atom is optimal")
        return Solution(mixture=dirac(0), value=value, branch=Branch.DEGENERATE_J0)

    modified = restrict_objective(instance, 1, range(2, instance.J + 1))
    modified_value = optimal_value(modified)
    if not isinstance(modified_value, Fraction):
        raise InvariantViolation(f"modified problem value {modified_value!r} is not finite")
    if modified_value > instance.d[0]:
        raise InvariantViolation(f"modified value {modified_value} exceeds d_1 = {instance.d[0]}")
    inner = _solve_main(modified, modified_value)
    if not is_feasible(instance, inner.mixture):
        raise InvariantViolation("modified optimum is infeasible for the original problem")
    logger.info(f"degenerate branch: modified value {modified_value}, support {len(inner.mixture)}")
    return Solution(
        mixture=inner.mixture,
        value=evaluate(instance, inner.mixture)[0],
        branch=Branch.DEGENERATE_RECURSIVE,
        modified_value=modified_value,
    )


def solve(instance: Instance) -> Union[Solution, Inconsistent]:
    """
    Optimal mixture of at most J+1 atoms, or INCONSISTENT.

    Returns:
        Solution whose value equals the optimal value exactly; main-branch
        solutions carry a verified-by-construction certificate.
    """
    value = optimal_value(instance)
    if value is INCONSISTENT:
        logger.info("instance is inconsistent")
        return INCONSISTENT
    if is_inf(value):
        return degenerate_solve(instance)
    return _solve_main(instance, value)

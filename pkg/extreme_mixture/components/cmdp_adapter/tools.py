"""
CMDP Adapter Tools

Turns a finite discounted constrained MDP into an instance whose atoms are
the deterministic stationary policies. Mixtures of atoms are mixtures of
occupation measures, so a solution is a mixture of at most J+1 policies.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ...config import get_settings
from ...errors import InputError
from ..exact_lp import solve_linear_system
from ..instance_model import Atom, Instance
from .models import Mdp, Policy

logger = logging.getLogger("extreme_mixture.cmdp_adapter")


def enumerate_policies(mdp: Mdp, cap: Optional[int] = None) -> List[Policy]:
    """All deterministic stationary policies in lexicographic order."""
    cap = cap if cap is not None else get_settings().policy_cap
    count = math.prod(mdp.actions)
    if count > cap:
        raise InputError(f"{count} deterministic policies exceed the cap of {cap}")
    return [
        Policy(actions=choice)
        for choice in itertools.product(*(range(a) for a in mdp.actions))
    ]


def occupation_measure(mdp: Mdp, policy: Policy) -> List[Fraction]:
    """Discounted state frequencies mu = sum_t gamma^t P_pi^t applied to the initial law."""
    _check_policy(mdp, policy)
    n = mdp.states
    # (I - gamma P_pi)^T mu = initial
    matrix = [
        [
            (Fraction(1) if s == t else Fraction(0)) - mdp.gamma * mdp.transition[t][policy.actions[t]][s]
            for t in range(n)
        ]
        for s in range(n)
    ]
    return solve_linear_system(matrix, mdp.initial)


def evaluate_policy(mdp: Mdp, policy: Policy) -> Tuple[Fraction, ...]:
    """Exact discounted costs (W_0, ..., W_J) of a deterministic policy."""
    mu = occupation_measure(mdp, policy)
    return tuple(
        sum((mu[s] * table[s][policy.actions[s]] for s in range(mdp.states)), Fraction(0))
        for table in mdp.costs
    )


def build_instance(mdp: Mdp, d: Sequence[Fraction], cap: Optional[int] = None) -> Instance:
    """One atom per deterministic policy, in enumeration order."""
    d = tuple(Fraction(x) for x in d)
    if len(d) + 1 != mdp.num_costs:
        raise InputError(f"{len(d)} bounds given for {mdp.num_costs - 1} constraint costs")
    policies = enumerate_policies(mdp, cap)
    atoms = tuple(Atom(id=i, w=evaluate_policy(mdp, p)) for i, p in enumerate(policies))
    logger.info(f"built instance with {len(atoms)} policies and J = {len(d)}")
    return Instance(J=len(d), atoms=atoms, d=d)


def _check_policy(mdp: Mdp, policy: Policy) -> None:
    if len(policy.actions) != mdp.states or any(
        not 0 <= a < mdp.actions[s] for s, a in enumerate(policy.actions)
    ):
        raise InputError(f"policy {policy.actions} is not valid for this MDP")

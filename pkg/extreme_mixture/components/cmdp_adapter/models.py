"""
Finite discounted MDP records.

JSON layout: {"states": N, "actions": [per-state counts], "P": P[s][a][s'],
"costs": [J+1 tables c_j[s][a]], "gamma": "p/q", "initial": [...]}.
"""

from fractions import Fraction
from typing import Tuple

from pydantic import Field, model_validator

from ...rational import FrozenModel, Rational, Vector


class Mdp(FrozenModel):
    states: int = Field(ge=1)
    actions: Tuple[int, ...]
    transition: Tuple[Tuple[Vector, ...], ...] = Field(alias="P")
    costs: Tuple[Tuple[Vector, ...], ...]
    gamma: Rational
    initial: Vector

    @model_validator(mode="after")
    def _check_shape(self) -> "Mdp":
        n = self.states
        if len(self.actions) != n or any(a < 1 for a in self.actions):
            raise ValueError("actions must list a positive count for every state")
        if not 0 < self.gamma < 1:
            raise ValueError("gamma must lie strictly inside (0, 1)")
        if len(self.initial) != n or any(p < 0 for p in self.initial) or sum(self.initial, Fraction(0)) != 1:
            raise ValueError("initial must be a probability vector over the states")
        if len(self.transition) != n:
            raise ValueError("P needs one block per state")
        for s, block in enumerate(self.transition):
            if len(block) != self.actions[s]:
                raise ValueError(f"P[{s}] needs {self.actions[s]} rows")
            for a, row in enumerate(block):
                if len(row) != n or any(p < 0 for p in row) or sum(row, Fraction(0)) != 1:
                    raise ValueError(f"P[{s}][{a}] is not a probability vector")
        if not self.costs:
            raise ValueError("at least one cost function (the objective) is required")
        for j, table in enumerate(self.costs):
            if len(table) != n or any(len(table[s]) != self.actions[s] for s in range(n)):
                raise ValueError(f"cost table {j} does not match the action counts")
        return self

    @property
    def num_costs(self) -> int:
        return len(self.costs)


class Policy(FrozenModel):
    """Deterministic stationary policy: actions[s] is the action taken in state s."""

    actions: Tuple[int, ...]

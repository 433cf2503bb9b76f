"""Carathéodory decomposition record."""

from fractions import Fraction
from typing import Tuple

from pydantic import model_validator

from ...rational import FrozenModel, Rational, Vector


class Decomposition(FrozenModel):
    parts: Tuple[Tuple[int, Rational], ...]
    point: Vector

    @model_validator(mode="after")
    def _check_weights(self) -> "Decomposition":
        if any(weight <= 0 for _, weight in self.parts):
            raise ValueError("decomposition weights must be strictly positive")
        if sum((weight for _, weight in self.parts), Fraction(0)) != 1:
            raise ValueError("decomposition weights do not sum to 1")
        return self

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(i for i, _ in self.parts)

"""
Instance records: atoms (pure points) with extended-real cost vectors, the
constraint bounds, and sparse mixtures over atoms.
"""

from enum import Enum
from fractions import Fraction
from typing import Tuple

from pydantic import Field, model_validator

from ...rational import ExtReal, ExtVector, FrozenModel, Rational, Vector

PerfVec = Tuple[ExtReal, ...]


class Inconsistent(Enum):
    """Marker for a problem without feasible solutions."""

    INCONSISTENT = "inconsistent"

    def __repr__(self) -> str:
        return "INCONSISTENT"


INCONSISTENT = Inconsistent.INCONSISTENT


class Atom(FrozenModel):
    id: int = Field(ge=0)
    w: ExtVector

    @model_validator(mode="after")
    def _check_costs(self) -> "Atom":
        if not self.w:
            raise ValueError(f"atom {self.id} has an empty cost vector")
        return self


class Instance(FrozenModel):
    J: int = Field(ge=0)
    atoms: Tuple[Atom, ...]
    d: Vector = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "Instance":
        if len(self.d) != self.J:
            raise ValueError(f"J = {self.J} but {len(self.d)} bounds were given")
        if not self.atoms:
            raise ValueError("an instance needs at least one atom")
        for position, atom in enumerate(self.atoms):
            if atom.id != position:
                raise ValueError(f"atom ids must be 0..m-1 in order, found {atom.id} at {position}")
            if len(atom.w) != self.J + 1:
                raise ValueError(
                    f"atom {atom.id} has {len(atom.w)} costs, expected J+1 = {self.J + 1}"
                )
        return self

    @classmethod
    def from_costs(cls, costs, d=()) -> "Instance":
        """Build an instance from a list of cost vectors; ids follow list order."""
        d = tuple(d)
        return cls(
            J=len(d),
            atoms=tuple(Atom(id=i, w=tuple(w)) for i, w in enumerate(costs)),
            d=d,
        )

    def with_bounds(self, d) -> "Instance":
        return Instance(J=self.J, atoms=self.atoms, d=tuple(d))


class Mixture(FrozenModel):
    support: Tuple[Tuple[int, Rational], ...]

    @model_validator(mode="after")
    def _check_weights(self) -> "Mixture":
        if not self.support:
            raise ValueError("a mixture needs a nonempty support")
        ids = [atom_id for atom_id, _ in self.support]
        if len(set(ids)) != len(ids):
            raise ValueError("mixture atom ids must be distinct")
        if any(atom_id < 0 for atom_id in ids):
            raise ValueError("mixture atom ids must be nonnegative")
        if any(weight <= 0 for _, weight in self.support):
            raise ValueError("mixture weights must be strictly positive")
        if sum((weight for _, weight in self.support), Fraction(0)) != 1:
            raise ValueError("mixture weights do not sum to 1")
        return self

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(atom_id for atom_id, _ in self.support)

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(weight for _, weight in self.support)

    def __len__(self) -> int:
        return len(self.support)

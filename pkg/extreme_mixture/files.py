"""
JSON file formats for instances, solutions and MDPs.

Every rational is written as a "p/q" (or integer) string, never as a JSON
number, so files round-trip exactly.
"""

import json
import random
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, Field

from .components.instance_model import Atom, Inconsistent, Instance, Mixture
from .components.pareto_face import Certificate, Hyperplane
from .errors import InputError
from .rational import INF, ExtReal, ExtVector, FrozenModel, Rational, Vector
from .solver import Solution

ModelT = TypeVar("ModelT", bound=BaseModel)

GRID_DENOMINATOR = 8
GRID_RANGE = 16


class AtomEntry(FrozenModel):
    w: ExtVector


class InstanceFile(FrozenModel):
    J: int = Field(ge=0)
    d: Vector = ()
    atoms: Tuple[AtomEntry, ...]

    def to_instance(self) -> Instance:
        try:
            return Instance(
                J=self.J,
                atoms=tuple(Atom(id=i, w=a.w) for i, a in enumerate(self.atoms)),
                d=self.d,
            )
        except ValueError as e:
            raise InputError(str(e)) from e

    @classmethod
    def from_instance(cls, instance: Instance) -> "InstanceFile":
        return cls(J=instance.J, d=instance.d, atoms=tuple(AtomEntry(w=a.w) for a in instance.atoms))


class MixtureEntry(FrozenModel):
    atom: int
    weight: Rational


class PlaneEntry(FrozenModel):
    b: Vector
    beta: Rational


class CertificateEntry(FrozenModel):
    w_star: Vector
    planes: Tuple[PlaneEntry, ...]
    active: Tuple[int, ...]

    def to_certificate(self) -> Certificate:
        return Certificate(
            w_star=self.w_star,
            planes=tuple(Hyperplane(b=p.b, beta=p.beta) for p in self.planes),
            active=self.active,
            k=len(self.planes),
        )


class SolutionFile(FrozenModel):
    """Solution as written to disk; weights are not validated here so verify can report on them."""

    status: str
    value: Optional[ExtReal] = None
    mixture: Tuple[MixtureEntry, ...] = ()
    branch: Optional[str] = None
    certificate: Optional[CertificateEntry] = None
    modified_value: Optional[Rational] = None
    policies: Optional[Tuple[Tuple[int, ...], ...]] = None

    @classmethod
    def from_result(cls, result: Union[Solution, Inconsistent], policies=None) -> "SolutionFile":
        if isinstance(result, Inconsistent):
            return cls(status="inconsistent")
        certificate = None
        if result.certificate is not None:
            cert = result.certificate
            certificate = CertificateEntry(
                w_star=cert.w_star,
                planes=tuple(PlaneEntry(b=p.b, beta=p.beta) for p in cert.planes),
                active=cert.active,
            )
        return cls(
            status="optimal",
            value=result.value,
            mixture=tuple(MixtureEntry(atom=i, weight=w) for i, w in result.mixture.support),
            branch=result.branch.value,
            certificate=certificate,
            modified_value=result.modified_value,
            policies=policies,
        )

    def to_mixture(self) -> Mixture:
        return Mixture(support=tuple((e.atom, e.weight) for e in self.mixture))


def dumps(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json", by_alias=True, exclude_none=True), indent=2) + "\n"


def load(path: Union[str, Path], model: Type[ModelT]) -> ModelT:
    """Read and validate a JSON file; syntax errors keep their line and column."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e
    try:
        return model.model_validate(data)
    except ValueError as e:
        raise InputError(f"{path}: {e}") from e


def write(path: Union[str, Path], model: BaseModel) -> None:
    Path(path).write_text(dumps(model))


def generate_instance(atoms: int, J: int, seed: int, inf_fraction: Fraction = Fraction(0)) -> InstanceFile:
    """
    Seeded random instance on the grid {k/8 : -16 <= k <= 16}.

    Each cost coordinate is independently infinite with probability
    inf_fraction. Bounds are anchored at one random atom plus a nonnegative
    grid offset, so the instance is consistent whenever that atom is finite
    on every constrained coordinate; a bound whose anchor coordinate is
    infinite is drawn freely from the grid.
    """
    if atoms < 1 or J < 0:
        raise InputError("need atoms >= 1 and J >= 0")
    inf_fraction = Fraction(inf_fraction)
    if not 0 <= inf_fraction <= 1:
        raise InputError("inf_fraction must lie in [0, 1]")
    rng = random.Random(seed)

    def grid() -> Fraction:
        return Fraction(rng.randint(-GRID_RANGE, GRID_RANGE), GRID_DENOMINATOR)

    def cost():
        if inf_fraction and rng.randrange(inf_fraction.denominator) < inf_fraction.numerator:
            return INF
        return grid()

    entries = [AtomEntry(w=tuple(cost() for _ in range(J + 1))) for _ in range(atoms)]
    anchor = entries[rng.randrange(atoms)].w
    d: List[Fraction] = []
    for j in range(1, J + 1):
        offset = Fraction(rng.randint(0, GRID_DENOMINATOR), GRID_DENOMINATOR)
        if anchor[j] == INF:
            d.append(grid())
        else:
            d.append(anchor[j] + offset)
    return InstanceFile(J=J, d=tuple(d), atoms=tuple(entries))

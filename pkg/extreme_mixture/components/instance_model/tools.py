"""
Instance Tools

Extended-real arithmetic, evaluation of mixtures, and the bookkeeping helpers
that turn atoms into labelled performance points.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from ...errors import InputError
from ...rational import INF, ExtRealValue, is_finite_vector, is_inf
from .models import Atom, Instance, Mixture, PerfVec

Point = Tuple[Fraction, ...]
Points = Union[Sequence[Sequence[Fraction]], Mapping[int, Sequence[Fraction]]]


def ext_combine(weights: Sequence[Fraction], values: Sequence[ExtRealValue]) -> ExtRealValue:
    """
    Convex combination of extended reals with 0*inf = 0 and a + inf = inf.

    Args:
        weights: Nonnegative rationals summing to exactly 1
        values: Rationals or INF, one per weight

    Returns:
        INF iff some INF value carries positive weight, else the exact sum.
    """
    if len(weights) != len(values):
        raise InputError(f"{len(weights)} weights for {len(values)} values")
    if sum(weights, Fraction(0)) != 1:
        raise InputError("weights do not sum to 1")
    total = Fraction(0)
    for weight, value in zip(weights, values):
        if weight < 0:
            raise InputError("weights must be nonnegative")
        if is_inf(value):
            if weight > 0:
                return INF
            continue
        total += weight * value
    return total


def evaluate(instance: Instance, mixture: Mixture) -> PerfVec:
    """Performance vector (W_0, ..., W_J) of a mixture."""
    m = len(instance.atoms)
    for atom_id in mixture.ids:
        if atom_id >= m:
            raise InputError(f"atom id {atom_id} is not in the instance (m = {m})")
    weights = mixture.weights
    return tuple(
        ext_combine(weights, [instance.atoms[i].w[j] for i in mixture.ids])
        for j in range(instance.J + 1)
    )


def is_feasible(instance: Instance, mixture: Mixture) -> bool:
    """True iff W_j <= d_j for j = 1..J (vacuous when J = 0)."""
    values = evaluate(instance, mixture)
    return all(values[j + 1] <= bound for j, bound in enumerate(instance.d))


def finite_atoms(instance: Instance, coords: Iterable[int]) -> List[int]:
    """Ids of the atoms whose costs are finite on every coordinate in coords."""
    coords = list(coords)
    for j in coords:
        if not 0 <= j <= instance.J:
            raise InputError(f"coordinate {j} outside 0..{instance.J}")
    return [
        atom.id for atom in instance.atoms if not any(is_inf(atom.w[j]) for j in coords)
    ]


def dirac(atom_id: int) -> Mixture:
    return Mixture(support=((atom_id, Fraction(1)),))


def blend(first: Mixture, second: Mixture, alpha: Fraction) -> Mixture:
    """The mixture alpha*first + (1 - alpha)*second, merged by atom id."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise InputError("alpha must lie in [0, 1]")
    weights: Dict[int, Fraction] = {}
    for mixture, scale in ((first, alpha), (second, 1 - alpha)):
        for atom_id, weight in mixture.support:
            weights[atom_id] = weights.get(atom_id, Fraction(0)) + scale * weight
    return Mixture(support=tuple((i, w) for i, w in sorted(weights.items()) if w > 0))


def restrict_objective(instance: Instance, objective: int, constraints: Sequence[int]) -> Instance:
    """
    Re-index an instance: coordinate `objective` becomes W_0 and the listed
    constraint coordinates become W_1..W_k with their original bounds.
    """
    for j in constraints:
        if not 1 <= j <= instance.J:
            raise InputError(f"constraint coordinate {j} outside 1..{instance.J}")
    if not 0 <= objective <= instance.J:
        raise InputError(f"objective coordinate {objective} outside 0..{instance.J}")
    coords = [objective, *constraints]
    return Instance(
        J=len(constraints),
        atoms=tuple(Atom(id=a.id, w=tuple(a.w[j] for j in coords)) for a in instance.atoms),
        d=tuple(instance.d[j - 1] for j in constraints),
    )


def finite_points(instance: Instance, ids: Iterable[int] = None) -> Dict[int, Point]:
    """Map atom id -> cost vector for fully finite atoms (optionally among ids)."""
    chosen = finite_atoms(instance, range(instance.J + 1)) if ids is None else list(ids)
    return {i: tuple(instance.atoms[i].w) for i in chosen if is_finite_vector(instance.atoms[i].w)}


def labelled(points: Points) -> List[Tuple[int, Point]]:
    """(id, vector) pairs sorted by id; plain sequences are labelled by position."""
    items = points.items() if isinstance(points, Mapping) else enumerate(points)
    pairs = sorted((int(i), tuple(Fraction(x) for x in p)) for i, p in items)
    if pairs and len({len(p) for _, p in pairs}) != 1:
        raise InputError("points must share one dimension")
    return pairs

"""
Oracle Tools

Brute-force ground truth, derived from the definitions alone. Only the exact
LP kernel is shared with the main pipeline.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, FrozenSet, Optional, Sequence, Tuple, Union

from ...config import get_settings
from ...errors import InputError, MembershipError
from ...rational import INF, ExtRealValue, is_inf
from ..exact_lp import Sense, eq, le, make_lp, solve_lp
from ..instance_model import INCONSISTENT, Inconsistent, Instance, labelled
from ..instance_model.tools import Point, Points
from .models import FaceSet

logger = logging.getLogger("extreme_mixture.oracle")

ZERO = Fraction(0)
ONE = Fraction(1)


def _restricted_optimum(
    instance: Instance, ids: Sequence[int]
) -> Union[ExtRealValue, Inconsistent]:
    """
    Optimum over mixtures supported on ids, computed lexicographically:
    first minimize the mass on atoms with infinite objective, then, if that
    mass can vanish, minimize W_0 over the remaining atoms.
    """
    usable = [
        i for i in ids
        if not any(is_inf(instance.atoms[i].w[j]) for j in range(1, instance.J + 1))
    ]
    if not usable:
        return INCONSISTENT

    def rows(chosen):
        out = [eq([ONE] * len(chosen), ONE)]
        for j in range(1, instance.J + 1):
            out.append(le([instance.atoms[i].w[j] for i in chosen], instance.d[j - 1]))
        return out

    mass = [ONE if is_inf(instance.atoms[i].w[0]) else ZERO for i in usable]
    first = solve_lp(make_lp(mass, constraints=rows(usable)))
    if not first.is_optimal:
        return INCONSISTENT
    if first.value > 0:
        return INF
    finite = [i for i in usable if not is_inf(instance.atoms[i].w[0])]
    second = solve_lp(make_lp([instance.atoms[i].w[0] for i in finite], constraints=rows(finite)))
    return second.value


def oracle_optimal(instance: Instance) -> Union[ExtRealValue, Inconsistent]:
    """Optimal value by one direct LP over all mixture weights."""
    return _restricted_optimum(instance, range(len(instance.atoms)))


def oracle_support_search(instance: Instance, s: int, max_atoms: Optional[int] = None) -> Union[ExtRealValue, Inconsistent]:
    """
    Best objective over mixtures supported on at most s atoms, by enumerating
    atom subsets. Larger supports never do worse, so only subsets of size
    min(s, m) are solved.
    """
    limit = max_atoms if max_atoms is not None else get_settings().oracle_max_atoms
    m = len(instance.atoms)
    if m > limit:
        raise InputError(f"support search limited to {limit} atoms, got {m}")
    if s < 1:
        raise InputError("support size must be at least 1")
    best: Union[ExtRealValue, Inconsistent] = INCONSISTENT
    for subset in itertools.combinations(range(m), min(s, m)):
        value = _restricted_optimum(instance, subset)
        if value is INCONSISTENT:
            continue
        if best is INCONSISTENT or value < best:
            best = value
    return best


def _member(points: Sequence[Point], u: Point) -> bool:
    if not points:
        return False
    rows = [eq([p[j] for p in points], u[j]) for j in range(len(u))]
    rows.append(eq([ONE] * len(points), ONE))
    return solve_lp(make_lp([ZERO] * len(points), constraints=rows)).is_optimal


def _closure(pairs: Dict[int, Point], subset: Sequence[int]) -> FrozenSet[int]:
    """All ids whose point lies in the hull of the subset."""
    base = [pairs[i] for i in subset]
    return frozenset(i for i, p in pairs.items() if i in subset or _member(base, p))


def _blends_into(pairs: Dict[int, Point], closed: FrozenSet[int]) -> bool:
    """
    Whether some point of the hull with positive weight outside `closed`
    lands in the hull of `closed`: maximize the outside mass of lambda subject
    to sum lambda_i p_i = sum mu_k s_k, both lambda and mu in simplices.
    """
    ids = sorted(pairs)
    inside = sorted(closed)
    outside = [i for i in ids if i not in closed]
    if not outside:
        return False
    dim = len(pairs[ids[0]])
    n_lam, n_mu = len(ids), len(inside)
    rows = []
    for j in range(dim):
        rows.append(eq([pairs[i][j] for i in ids] + [-pairs[k][j] for k in inside], ZERO))
    rows.append(eq([ONE] * n_lam + [ZERO] * n_mu, ONE))
    rows.append(eq([ZERO] * n_lam + [ONE] * n_mu, ONE))
    objective = [ONE if i in outside else ZERO for i in ids] + [ZERO] * n_mu
    outcome = solve_lp(make_lp(objective, Sense.MAX, rows))
    return outcome.is_optimal and outcome.value > 0


def is_face(points: Points, subset: Sequence[int]) -> bool:
    """Definitional test: the hull of subset is a nonempty extreme convex subset."""
    pairs = dict(labelled(points))
    if not subset or any(i not in pairs for i in subset):
        return False
    return not _blends_into(pairs, _closure(pairs, list(subset)))


def oracle_faces(points: Points, max_points: Optional[int] = None) -> FaceSet:
    """
    Every face of the hull, each listed as the sorted ids of all points lying
    in it. Candidate faces are spanned by subsets of the extreme points.
    """
    limit = max_points if max_points is not None else get_settings().oracle_max_points
    pairs = dict(labelled(points))
    if len(pairs) > limit:
        raise InputError(f"face enumeration limited to {limit} points, got {len(pairs)}")
    if not pairs:
        raise InputError("face enumeration needs at least one point")
    first_ids = {}
    for i in sorted(pairs):
        first_ids.setdefault(pairs[i], i)
    vertices = [
        i for p, i in sorted(first_ids.items(), key=lambda item: item[1])
        if not _member([q for q in first_ids if q != p], p)
    ]
    faces = set()
    for size in range(1, len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            rest = [v for v in vertices if v not in subset]
            base = [pairs[i] for i in subset]
            if any(_member(base, pairs[v]) for v in rest):
                continue
            closed = _closure(pairs, list(subset))
            if closed in faces:
                continue
            if not _blends_into(pairs, closed):
                faces.add(closed)
    ordered = sorted((tuple(sorted(f)) for f in faces), key=lambda f: (len(f), f))
    logger.debug(f"enumerated {len(ordered)} faces over {len(pairs)} points")
    return FaceSet(faces=tuple(ordered))


def oracle_minimal_face(points: Points, u: Sequence[Fraction], max_points: Optional[int] = None) -> Tuple[int, ...]:
    """Intersection of all faces whose hull contains u."""
    pairs = dict(labelled(points))
    u = tuple(Fraction(x) for x in u)
    if not _member(list(pairs.values()), u):
        raise MembershipError(f"{u} is not in the convex hull of the given points")
    result: Optional[FrozenSet[int]] = None
    for face in oracle_faces(pairs, max_points).faces:
        if _member([pairs[i] for i in face], u):
            result = frozenset(face) if result is None else result & frozenset(face)
    return tuple(sorted(result))


def argmin_face(points: Points, face: Sequence[int], f: Sequence[Fraction]) -> Tuple[int, ...]:
    """Ids of the face points minimizing the linear functional f."""
    pairs = dict(labelled(points))
    values = {i: sum((a * x for a, x in zip(f, pairs[i])), ZERO) for i in face}
    best = min(values.values())
    return tuple(sorted(i for i, v in values.items() if v == best))

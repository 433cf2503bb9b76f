"""
Carathéodory Tools

Affine dimension, extreme-point tests and the reduction of a representation
of a point to at most dim + 1 extreme points.
"""

import logging
from fractions import Fraction
from typing import Dict, Sequence

from ...errors import InputError, InvariantViolation, MembershipError
from ..exact_lp import eq, find_feasible, nullspace_vector, rank
from ..instance_model import labelled
from ..instance_model.tools import Point, Points
from .models import Decomposition

logger = logging.getLogger("extreme_mixture.caratheodory")

ZERO = Fraction(0)
ONE = Fraction(1)


def affine_dimension(points: Points) -> int:
    """Rank of {p_i - p_0}; 0 for a single point."""
    pairs = labelled(points)
    if not pairs:
        raise InputError("affine_dimension needs at least one point")
    origin = pairs[0][1]
    return rank([tuple(a - b for a, b in zip(p, origin)) for _, p in pairs[1:]])


def _in_hull(candidates: Sequence[Point], u: Point):
    if not candidates:
        return None
    rows = [eq([p[j] for p in candidates], u[j]) for j in range(len(u))]
    rows.append(eq([ONE] * len(candidates), ONE))
    return find_feasible(rows, num_variables=len(candidates))


def is_extreme(points: Points, i: int) -> bool:
    """True iff point i is not in the hull of the other points (duplicates count as others)."""
    pairs = dict(labelled(points))
    if i not in pairs:
        raise InputError(f"no point with id {i}")
    others = [p for j, p in pairs.items() if j != i]
    return _in_hull(others, pairs[i]) is None


def _distinct(pairs) -> Dict[int, Point]:
    """Keep the lowest id for every distinct vector."""
    seen: Dict[Point, int] = {}
    for atom_id, p in pairs:
        seen.setdefault(p, atom_id)
    return {atom_id: p for p, atom_id in seen.items()}


def decompose(points: Points, u: Sequence[Fraction]) -> Decomposition:
    """
    Write u as a convex combination of at most affine_dimension(points) + 1
    extreme points.

    Duplicated vectors are represented by their lowest id. The starting
    representation comes from a membership LP over the extreme points; while
    the support is affinely dependent, weights move along an affine dependence
    until some weight reaches zero.

    Raises:
        MembershipError: u is outside the hull.
    """
    u = tuple(Fraction(x) for x in u)
    pairs = labelled(points)
    distinct = _distinct(pairs)
    extreme = {i: p for i, p in distinct.items() if is_extreme(distinct, i)}
    ids = sorted(extreme)
    start = _in_hull([extreme[i] for i in ids], u)
    if start is None:
        raise MembershipError(f"{u} is not in the convex hull of the given points")
    weights: Dict[int, Fraction] = {i: lam for i, lam in zip(ids, start) if lam > 0}

    while True:
        support = sorted(weights)
        mu = nullspace_vector([extreme[i] + (ONE,) for i in support])
        if mu is None:
            break
        if not any(x > 0 for x in mu):
            mu = tuple(-x for x in mu)
        theta = min(weights[i] / m for i, m in zip(support, mu) if m > 0)
        for i, m in zip(support, mu):
            weights[i] -= theta * m
        dropped = [i for i in support if weights[i] == 0]
        for i in dropped:
            del weights[i]
        logger.debug(f"reduction dropped {dropped}, support now {len(weights)}")

    parts = tuple(sorted(weights.items()))
    rebuilt = tuple(
        sum((w * extreme[i][j] for i, w in parts), ZERO) for j in range(len(u))
    )
    if rebuilt != u:
        raise InvariantViolation("decomposition does not reproduce the point")
    if len(parts) > affine_dimension(dict(pairs)) + 1:
        raise InvariantViolation("decomposition support exceeds dimension + 1")
    logger.info(f"decomposed {u} over {len(parts)} extreme points")
    return Decomposition(parts=parts, point=u)

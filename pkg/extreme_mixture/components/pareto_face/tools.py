"""
Pareto and Face Tools

Performance-space geometry over a finite set of labelled points: the optimal
value of the constrained problem, its Pareto point, dominance tests, minimal
faces and the sequence of supporting hyperplanes that cuts a minimal face out.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ...errors import CertificateStall, InputError, InvariantViolation, MembershipError, PreconditionError
from ...rational import INF, ExtRealValue, dot
from ..exact_lp import Sense, eq, find_feasible, ge, le, make_lp, solve_lp
from ..instance_model import (
    INCONSISTENT,
    Inconsistent,
    Instance,
    finite_atoms,
    finite_points,
    labelled,
)
from ..instance_model.tools import Point, Points
from .models import Certificate, Hyperplane, VerificationReport

logger = logging.getLogger("extreme_mixture.pareto_face")

ZERO = Fraction(0)
ONE = Fraction(1)


def _mixture_rows(instance: Instance, ids: Sequence[int], extra_bound: Optional[Fraction] = None):
    """Simplex row plus W_j <= d_j rows over the given atoms (and W_0 <= extra_bound)."""
    rows = [eq([ONE] * len(ids), ONE)]
    for j, bound in enumerate(instance.d, start=1):
        rows.append(le([instance.atoms[i].w[j] for i in ids], bound))
    if extra_bound is not None:
        rows.append(le([instance.atoms[i].w[0] for i in ids], extra_bound))
    return rows


def optimal_value(instance: Instance) -> Union[ExtRealValue, Inconsistent]:
    """
    Optimal value of: minimize W_0 over mixtures subject to W_j <= d_j.

    Returns:
        INCONSISTENT when no mixture is feasible, INF when every feasible
        mixture has infinite objective, else the exact optimum.
    """
    usable = finite_atoms(instance, range(1, instance.J + 1))
    if not usable or find_feasible(_mixture_rows(instance, usable)) is None:
        return INCONSISTENT
    finite = finite_atoms(instance, range(instance.J + 1))
    if not finite:
        return INF
    outcome = solve_lp(
        make_lp([instance.atoms[i].w[0] for i in finite], constraints=_mixture_rows(instance, finite))
    )
    if not outcome.is_optimal:
        return INF
    return outcome.value


def pareto_point(instance: Instance) -> Point:
    """
    Performance vector of an optimum of the auxiliary problem
    minimize sum_j W_j subject to W_0 <= d_0 and W_j <= d_j, where d_0 is the
    optimal value. The result is Pareto in the hull of the finite atoms.
    """
    d0 = optimal_value(instance)
    if not isinstance(d0, Fraction):
        raise PreconditionError(f"pareto_point needs a finite optimal value, got {d0!r}")
    finite = finite_atoms(instance, range(instance.J + 1))
    outcome = solve_lp(
        make_lp(
            [sum(instance.atoms[i].w, ZERO) for i in finite],
            constraints=_mixture_rows(instance, finite, extra_bound=d0),
        )
    )
    if not outcome.is_optimal:
        raise InvariantViolation("auxiliary sum problem has no optimum despite a finite value")
    w_star = tuple(
        sum((lam * instance.atoms[i].w[j] for lam, i in zip(outcome.point, finite)), ZERO)
        for j in range(instance.J + 1)
    )
    if w_star[0] != d0:
        raise InvariantViolation(f"Pareto point objective {w_star[0]} differs from optimum {d0}")
    logger.info(f"Pareto point {w_star} for optimal value {d0}")
    return w_star


def _hull_rows(pairs: Sequence[Tuple[int, Point]], u: Sequence[Fraction]):
    dim = len(u)
    rows = [eq([p[j] for _, p in pairs], u[j]) for j in range(dim)]
    rows.append(eq([ONE] * len(pairs), ONE))
    return rows


def is_pareto(u: Sequence[Fraction], atoms: Points) -> bool:
    """True iff no point of the hull is componentwise <= u with a smaller coordinate sum."""
    pairs = labelled(atoms)
    if not pairs:
        return False
    u = tuple(Fraction(x) for x in u)
    rows = [le([p[j] for _, p in pairs], u[j]) for j in range(len(u))]
    rows.append(eq([ONE] * len(pairs), ONE))
    outcome = solve_lp(make_lp([sum(p, ZERO) for _, p in pairs], constraints=rows))
    return outcome.is_optimal and outcome.value == sum(u, ZERO)


def minimal_face(atoms: Points, u: Sequence[Fraction]) -> Tuple[int, ...]:
    """
    Ids of the points lying in the minimal face of the hull containing u:
    those that receive positive weight in some representation of u.
    """
    pairs = labelled(atoms)
    u = tuple(Fraction(x) for x in u)
    rows = _hull_rows(pairs, u)
    start = find_feasible(rows, num_variables=len(pairs))
    if start is None:
        raise MembershipError(f"{u} is not in the convex hull of the given points")
    active = {pairs[k][0] for k, lam in enumerate(start) if lam > 0}
    for k, (atom_id, _) in enumerate(pairs):
        if atom_id in active:
            continue
        objective = [ZERO] * len(pairs)
        objective[k] = ONE
        outcome = solve_lp(make_lp(objective, Sense.MAX, rows))
        if outcome.value > 0:
            active.update(pairs[i][0] for i, lam in enumerate(outcome.point) if lam > 0)
    return tuple(sorted(active))


def _supporting_rows(stage: Sequence[Point], u: Point) -> list:
    """b . (p - u) >= 0 for every point of the stage, and sum(b) = 1."""
    dim = len(u)
    rows = [eq([ONE] * dim, ONE)]
    for p in stage:
        diff = [p[j] - u[j] for j in range(dim)]
        if any(diff):
            rows.append(ge(diff, ZERO))
    return rows


def _strict_normal(stage: Sequence[Point], u: Point) -> Tuple[Optional[Fraction], Optional[Point]]:
    """Max-min LP: maximize t with b_j >= t over nonnegative supporting normals."""
    dim = len(u)
    rows = []
    for j in range(dim):
        coeffs = [ZERO] * (dim + 1)
        coeffs[j], coeffs[dim] = ONE, -ONE
        rows.append(ge(coeffs, ZERO))
    for row in _supporting_rows(stage, u):
        rows.append(row.model_copy(update={"coefficients": row.coefficients + (ZERO,)}))
    outcome = solve_lp(make_lp([ZERO] * dim + [ONE], Sense.MAX, rows))
    if not outcome.is_optimal:
        return None, None
    return outcome.value, outcome.point[:dim]


def _separating_normal(stage: Sequence[Point], u: Point, q: Point) -> Optional[Point]:
    """A supporting normal maximizing b . (q - u); None when it cannot be positive."""
    diff = [q[j] - u[j] for j in range(len(u))]
    outcome = solve_lp(make_lp(diff, Sense.MAX, _supporting_rows(stage, u)))
    if outcome.is_optimal and outcome.value > 0:
        return outcome.point
    return None


def _normalized(b: Sequence[Fraction]) -> Point:
    total = sum(b, ZERO)
    return tuple(x / total for x in b)


def fs_certificate(atoms: Points, u: Sequence[Fraction]) -> Certificate:
    """
    Build supporting hyperplanes H^1..H^k whose intersection with the hull is
    the minimal face of the Pareto point u.

    Each stage sums, over every point some nonnegative supporting normal can
    strictly separate from u, one such normal (plus a strictly positive normal
    when one exists), so each stage removes every separable point at once.
    The sequence ends when nothing is separable and the last normal is
    strictly positive.

    Raises:
        CertificateStall: no admissible normal exists at some stage.
    """
    pairs = labelled(atoms)
    u = tuple(Fraction(x) for x in u)
    stage: Dict[int, Point] = dict(pairs)
    planes: List[Hyperplane] = []
    while True:
        t_star, b_pos = _strict_normal(list(stage.values()), u)
        if t_star is None:
            raise CertificateStall(f"no nonnegative supporting normal at stage {len(planes) + 1}")
        normals: List[Point] = []
        for atom_id, q in stage.items():
            if any(dot(b, q) > dot(b, u) for b in normals):
                continue
            b = _separating_normal(list(stage.values()), u, q)
            if b is not None:
                normals.append(b)
        if not normals:
            if planes and all(x > 0 for x in planes[-1].b):
                break
            if t_star > 0:
                b = _normalized(b_pos)
                planes.append(Hyperplane(b=b, beta=dot(b, u)))
                break
            raise CertificateStall(
                f"stage {len(planes) + 1}: no strictly positive normal and nothing separable"
            )
        if t_star > 0:
            normals.append(b_pos)
        total = [sum((b[j] for b in normals), ZERO) for j in range(len(u))]
        b = _normalized(total)
        beta = dot(b, u)
        planes.append(Hyperplane(b=b, beta=beta))
        stage = {i: p for i, p in stage.items() if dot(b, p) == beta}
        logger.debug(f"stage {len(planes)}: normal {b}, {len(stage)} points remain")
    logger.info(f"certificate with {len(planes)} planes, active set {sorted(stage)}")
    return Certificate(w_star=u, planes=tuple(planes), active=tuple(sorted(stage)), k=len(planes))


def verify_certificate(atoms: Points, u: Sequence[Fraction], cert: Certificate) -> VerificationReport:
    """
    Check every certificate property exactly.

    Returns:
        A report that is truthy iff all checks hold, with one reason per failure.
    """
    pairs = labelled(atoms)
    u = tuple(Fraction(x) for x in u)
    dim = len(u)
    reasons: List[str] = []
    if tuple(cert.w_star) != u:
        reasons.append("certificate point differs from u")
    if not 1 <= cert.k <= dim:
        reasons.append(f"certificate length {cert.k} outside 1..J+1 = {dim}")
    stage = dict(pairs)
    for i, plane in enumerate(cert.planes, start=1):
        b = tuple(plane.b)
        if len(b) != dim:
            reasons.append(f"normal {i} has dimension {len(b)}, expected {dim}")
            stage = {}
            break
        if any(x < 0 for x in b):
            reasons.append(f"normal {i} has a negative component")
        if sum(b, ZERO) != 1:
            reasons.append(f"normal {i} is not normalized to sum 1")
        if dot(b, u) != plane.beta:
            reasons.append(f"support equality fails at u (plane {i})")
        if any(dot(b, p) < plane.beta for p in stage.values()):
            reasons.append(f"support inequality fails at stage {i}")
        stage = {atom_id: p for atom_id, p in stage.items() if dot(b, p) == plane.beta}
    if cert.planes and not all(x > 0 for x in cert.planes[-1].b):
        reasons.append("final normal not strictly positive")
    if tuple(sorted(stage)) != tuple(sorted(cert.active)):
        reasons.append("active set differs from the plane intersection")
    try:
        if minimal_face(dict(pairs), u) != tuple(sorted(cert.active)):
            reasons.append("active set differs from the minimal face")
    except MembershipError:
        reasons.append("u lies outside the hull")
    for reason in reasons:
        logger.warning(f"certificate check failed: {reason}")
    return VerificationReport(ok=not reasons, reasons=tuple(reasons))


def face_is_pareto(atoms: Points, face: Sequence[int]) -> bool:
    """True iff every point of the face is Pareto in the hull of all points."""
    pairs = dict(labelled(atoms))
    return all(is_pareto(pairs[i], pairs) for i in face)


def preimage(instance: Instance, w: Sequence[Fraction]) -> List[int]:
    """Ids of fully finite atoms whose cost vector equals w, increasing."""
    w = tuple(Fraction(x) for x in w)
    return [i for i, p in finite_points(instance).items() if p == w]


def certificate_bounds(atoms: Points, cert: Certificate) -> List[Tuple[Fraction, Fraction]]:
    """
    Box that contains the certified face. lower_j is the minimum of
    coordinate j over the face; upper_j = (beta - sum_{i != j} b_i lower_i) / b_j
    for the final strictly positive normal b.
    """
    pairs = dict(labelled(atoms))
    if not cert.planes or not all(x > 0 for x in cert.planes[-1].b):
        raise PreconditionError("certificate_bounds needs a strictly positive final normal")
    if not cert.active or any(i not in pairs for i in cert.active):
        raise InputError("certificate active set does not name the given points")
    final = cert.planes[-1]
    dim = len(final.b)
    face = [pairs[i] for i in cert.active]
    lower = [min(p[j] for p in face) for j in range(dim)]
    bounds = []
    for j in range(dim):
        rest = sum((final.b[i] * lower[i] for i in range(dim) if i != j), ZERO)
        bounds.append((lower[j], (final.beta - rest) / final.b[j]))
    return bounds

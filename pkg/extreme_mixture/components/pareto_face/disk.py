"""
Supporting normals of a disk whose boundary meets a ray of points with an
infinite first coordinate.

On the disk alone, every boundary point has a unique supporting normal. When
that normal has a zero first component, 0 * inf = 0 lets the ray points slip
below the supporting value, so no nonnegative hyperplane supports the glued set.
"""

import logging
from fractions import Fraction
from typing import Sequence, Tuple

from ...errors import InputError
from ...rational import INF, dot
from .models import DiskReport

logger = logging.getLogger("extreme_mixture.pareto_face.disk")

ZERO = Fraction(0)


def disk_counterexample(
    center: Sequence[Fraction],
    radius: Fraction,
    u: Sequence[Fraction],
    ray: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(2)),
) -> DiskReport:
    """
    Analyse the supporting normal of the disk at boundary point u against the
    ray {(inf, v2) : lo <= v2 <= hi}.

    Args:
        center: Disk center (c1, c2)
        radius: Disk radius, positive
        u: Boundary point of the disk
        ray: Interval (lo, hi) of second coordinates on the infinite ray

    Returns:
        DiskReport with the normal (scaled so its absolute values sum to 1),
        beta = b.u, and the ray point that violates b.v >= beta, if any.
    """
    c = tuple(Fraction(x) for x in center)
    u = tuple(Fraction(x) for x in u)
    radius = Fraction(radius)
    lo, hi = (Fraction(x) for x in ray)
    if radius <= 0:
        raise InputError("radius must be positive")
    if lo > hi:
        raise InputError("ray interval must satisfy lo <= hi")
    if (u[0] - c[0]) ** 2 + (u[1] - c[1]) ** 2 != radius ** 2:
        raise InputError(f"u = {u} is not on the boundary of the disk")

    direction = (c[0] - u[0], c[1] - u[1])
    scale = abs(direction[0]) + abs(direction[1])
    b = tuple(x / scale for x in direction)
    beta = dot(b, u)
    logger.info(f"unique supporting normal {b} with beta {beta}")

    if b[0] > 0:
        return DiskReport(normal=b, beta=beta, counterexample=False)
    if b[0] < 0:
        return DiskReport(normal=b, beta=beta, counterexample=True)
    # b1 = 0, so b.(inf, v2) = b2 * v2; its minimum over the ray sits at an endpoint
    v2 = lo if b[1] >= 0 else hi
    value = b[1] * v2
    if value < beta:
        return DiskReport(
            normal=b,
            beta=beta,
            violating_point=(INF, v2),
            violation_value=value,
            counterexample=True,
        )
    return DiskReport(normal=b, beta=beta, counterexample=False)

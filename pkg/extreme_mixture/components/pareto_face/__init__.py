"""Pareto points, minimal faces and supporting-hyperplane certificates."""

from .models import Certificate, DiskReport, Hyperplane, VerificationReport
from .tools import (
    certificate_bounds,
    face_is_pareto,
    fs_certificate,
    is_pareto,
    minimal_face,
    optimal_value,
    pareto_point,
    preimage,
    verify_certificate,
)
from .disk import disk_counterexample

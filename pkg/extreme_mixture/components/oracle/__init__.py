"""Brute-force ground truth for optimization and face claims."""

from .models import FaceSet
from .tools import (
    argmin_face,
    is_face,
    oracle_faces,
    oracle_minimal_face,
    oracle_optimal,
    oracle_support_search,
)

"""Finite mixture model of the convex set and its performance functionals."""

from .models import INCONSISTENT, Atom, Inconsistent, Instance, Mixture, PerfVec
from .tools import (
    blend,
    dirac,
    evaluate,
    ext_combine,
    finite_atoms,
    finite_points,
    is_feasible,
    labelled,
    restrict_objective,
)

"""
Exact linear algebra over the rationals, delegated to sympy matrices.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from ...errors import InputError, InvariantViolation
from ...rational import from_sympy, to_sympy


def _matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix([[to_sympy(Fraction(x)) for x in row] for row in rows])


def rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank of the given vectors (as rows); 0 for an empty list."""
    if not vectors:
        return 0
    if len({len(v) for v in vectors}) != 1:
        raise InputError("vectors must share one dimension")
    if len(vectors[0]) == 0:
        return 0
    return _matrix(vectors).rank()


def nullspace_vector(columns: Sequence[Sequence[Fraction]]) -> Optional[Tuple[Fraction, ...]]:
    """A nonzero mu with sum_i mu_i * columns[i] = 0, or None if the columns are independent."""
    if not columns:
        return None
    matrix = _matrix(columns).T
    basis = matrix.nullspace()
    if not basis:
        return None
    return tuple(from_sympy(x) for x in basis[0])


def solve_linear_system(
    matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]
) -> List[Fraction]:
    """Solve matrix @ x = rhs for a nonsingular square matrix."""
    a = _matrix(matrix)
    if a.rows != a.cols or a.rows != len(rhs):
        raise InputError("solve_linear_system needs a square matrix and matching rhs")
    if a.det() == 0:
        raise InvariantViolation("linear system is singular")
    x = a.LUsolve(sympy.Matrix([to_sympy(Fraction(v)) for v in rhs]))
    return [from_sympy(v) for v in x]

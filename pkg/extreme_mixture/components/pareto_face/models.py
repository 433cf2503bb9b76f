"""
Records for supporting hyperplanes and the certificates built from them.

Certificates are plain data: their geometric invariants are checked by
verify_certificate, so that a damaged certificate can still be loaded and
reported on.
"""

from typing import Optional, Tuple

from pydantic import model_validator

from ...rational import ExtReal, ExtVector, FrozenModel, Rational, Vector, format_vector


class Hyperplane(FrozenModel):
    b: Vector
    beta: Rational


class Certificate(FrozenModel):
    w_star: Vector
    planes: Tuple[Hyperplane, ...]
    active: Tuple[int, ...]
    k: int

    @model_validator(mode="after")
    def _check_length(self) -> "Certificate":
        if self.k != len(self.planes):
            raise ValueError(f"k = {self.k} but {len(self.planes)} planes were given")
        return self


class VerificationReport(FrozenModel):
    ok: bool
    reasons: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


class DiskReport(FrozenModel):
    """Outcome of the supporting-normal analysis of a disk glued to a ray at infinity."""

    normal: Vector
    beta: Rational
    violating_point: Optional[ExtVector] = None
    violation_value: Optional[ExtReal] = None
    counterexample: bool

    def lines(self):
        yield f"supporting normal b = {format_vector(self.normal)}"
        yield f"beta = {self.beta}"
        if self.counterexample and self.violating_point is not None:
            value = "n/a" if self.violation_value is None else str(self.violation_value)
            yield f"support inequality violated by {format_vector(self.violating_point)}: b.v = {value} < beta = {self.beta}"
            yield "no nonnegative supporting hyperplane exists over the extended set"
        elif self.counterexample:
            yield "supporting normal has a negative component: no admissible hyperplane exists"
        else:
            yield "no counterexample: the infinite coordinate saturates the support inequality"

"""
Exact number types

Rationals are fractions.Fraction throughout. Extended reals add the single
value +inf (math.inf); -inf is never a valid value.
"""

import math
from fractions import Fraction
from typing import Annotated, Any, Sequence, Tuple, Union

import sympy
from pydantic import BaseModel, ConfigDict, PlainSerializer, PlainValidator

INF = math.inf

ExtRealValue = Union[Fraction, float]


def parse_rational(value: Any) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise ValueError(f"invalid rational {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"invalid rational {value!r}") from None
    raise ValueError(f"invalid rational {value!r}")


def parse_ext_real(value: Any) -> ExtRealValue:
    """Like parse_rational, but also accepts "inf" and math.inf."""
    if isinstance(value, float):
        if value == INF:
            return INF
        raise ValueError(f"invalid extended real {value!r}: only +inf may be a float")
    if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    if isinstance(value, str) and value.strip().lower() in ("-inf", "-infinity"):
        raise ValueError("-inf is not allowed: costs must be bounded from below")
    return parse_rational(value)


def format_rational(value: Fraction) -> str:
    return str(value)


def format_ext_real(value: ExtRealValue) -> str:
    return "inf" if is_inf(value) else str(value)


def is_inf(value: ExtRealValue) -> bool:
    return isinstance(value, float) and value == INF


def is_finite_vector(values: Sequence[ExtRealValue]) -> bool:
    return not any(is_inf(v) for v in values)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def format_vector(values: Sequence[ExtRealValue]) -> str:
    return "(" + ", ".join(format_ext_real(v) for v in values) + ")"


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: Any) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]

ExtReal = Annotated[
    ExtRealValue,
    PlainValidator(parse_ext_real),
    PlainSerializer(format_ext_real, return_type=str),
]

Vector = Tuple[Rational, ...]
ExtVector = Tuple[ExtReal, ...]


class FrozenModel(BaseModel):
    """Immutable record base shared by all components."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True, populate_by_name=True)

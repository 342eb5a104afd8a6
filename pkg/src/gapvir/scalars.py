"""Exact rational scalars and their string wire format."""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm

Scalar = Fraction

_SCALAR_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    """Malformed or inconsistent user input (bad JSON, wrong dimensions, p < 2, ...)."""


def to_scalar(x) -> Fraction:
    """Coerce ``x`` to an exact rational.

    Accepts ints, Fractions and strings of the form ``"a"`` or ``"a/b"``.
    Floats are refused since they would smuggle in rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a scalar: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _SCALAR_RE.match(s):
            raise InputError(f"not a rational scalar string: {x!r}")
        try:
            return Fraction(s)
        except ZeroDivisionError:
            raise InputError(f"zero denominator in {x!r}") from None
    raise InputError(f"cannot interpret {type(x).__name__} {x!r} as an exact scalar")


def format_scalar(x) -> str:
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_integer(x) -> bool:
    return to_scalar(x).denominator == 1


def common_denominator(values) -> int:
    d = 1
    for v in values:
        d = lcm(d, v.denominator)
    return d


def check_p(p) -> int:
    if isinstance(p, bool) or not isinstance(p, int):
        raise InputError(f"gap parameter must be an integer, got {p!r}")
    if p < 2:
        raise InputError(f"gap parameter must satisfy p >= 2, got {p}")
    return p

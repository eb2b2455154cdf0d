"""Exact rationals on the wire: ``"p/q"`` or integer strings, nothing else."""
from __future__ import annotations

import math
import re
from fractions import Fraction

Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rat(text) -> Fraction:
    """Parse ``"p/q"``, ``"-p/q"`` or ``"n"`` into a Fraction.

    Python ints are accepted too. Floats and decimal strings are rejected,
    since they cannot be read back exactly.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RAT_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rat(x) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        raise TypeError(f"refusing to format inexact value {x!r}")
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

"""The sl2 obstruction to finite-dimensionality.

A finite-dimensional module in category O is a finite-dimensional module over
the sl2-triple containing the grading element, so its graded dimensions are
symmetric about 0. A truncated character of L(tau) whose certified window
contains both e and -e with different coefficients therefore proves that
L(tau) is infinite-dimensional. The test never proves finiteness.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .decomp import expansion
from .errors import CountMismatch
from .gseries import GradedSeries, combine, verma_series
from .rational import format_rat
from .repdata import DecompMatrix, GroupData
from .weights import h_weight

DEFAULT_SPAN = 16


class VerdictKind(enum.Enum):
    INFINITE_DIMENSIONAL = "INFINITE-DIMENSIONAL"
    INCONCLUSIVE = "INCONCLUSIVE"
    UNTESTED = "UNTESTED"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    window: Optional[tuple] = None
    witness_exponent: Optional[Fraction] = None
    dim_neg: Optional[int] = None
    dim_pos: Optional[int] = None

    @property
    def infinite(self) -> bool:
        return self.kind is VerdictKind.INFINITE_DIMENSIONAL

    def render(self, label) -> str:
        if self.infinite:
            rel = "<" if self.dim_neg < self.dim_pos else ">"
            return (
                f"{label}: {self.kind.value} (i={format_rat(self.witness_exponent)}: "
                f"{self.dim_neg} {rel} {self.dim_pos})"
            )
        if self.window is not None:
            lo, hi = self.window
            return f"{label}: {self.kind.value} (window [{format_rat(lo)},{format_rat(hi)}))"
        return f"{label}: {self.kind.value}"


UNTESTED = Verdict(VerdictKind.UNTESTED)


def simple_character(group: GroupData, c, matrix: DecompMatrix, tau, truncation_hi=None) -> GradedSeries:
    """Truncated graded character of L(tau) on [h_c(tau), D).

    When the expansion is exact everywhere (D infinite) the series is cut at
    ``truncation_hi``, by default h_c(tau) + 16.
    """
    c = Fraction(c)
    exp = expansion(matrix, tau, group, c)
    h0 = h_weight(group, c, tau)
    hi = exp.valid_below
    if hi == math.inf:
        hi = Fraction(truncation_hi) if truncation_hi is not None else h0 + DEFAULT_SPAN
    terms = [(k, verma_series(group, c, lab, hi, lo=h0)) for k, lab in exp.terms]
    return combine(terms)


def sl2_symmetry_test(series: GradedSeries) -> Verdict:
    window = (series.lo, series.hi)
    candidates = sorted({abs(e) for e in series.coeffs if e != 0})
    for e in candidates:
        if not (series.in_window(e) and series.in_window(-e)):
            continue
        neg, pos = series.coeffs.get(-e, 0), series.coeffs.get(e, 0)
        if neg != pos:
            return Verdict(VerdictKind.INFINITE_DIMENSIONAL, window, e, neg, pos)
    return Verdict(VerdictKind.INCONCLUSIVE, window)


def classify(candidates, expected_count: int, verdicts) -> list:
    """Drop candidates proved infinite-dimensional and check the count.

    Candidates missing from ``verdicts`` count as untested and are kept. The
    result is only a classification when exactly ``expected_count`` remain.
    """
    remainder = [lab for lab in candidates if not verdicts.get(lab, UNTESTED).infinite]
    if len(remainder) != expected_count:
        raise CountMismatch(remainder, expected_count)
    return remainder

"""Truncated graded characters.

A :class:`GradedSeries` is a finite map from exact rational exponents to
integer coefficients together with a half-open window ``[lo, hi)`` on which
those coefficients are certified. Exponents are eigenvalues of the grading
element, so a Verma module M(tau) starts at h_c(tau).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

from .errors import EmptyWindow, OutsideWindow
from .rational import format_rat
from .repdata import GroupData
from .weights import h_weight


def poly_coeff(dim_v: int, k: int) -> int:
    """Dimension of the degree-k polynomials in ``dim_v`` variables."""
    if dim_v < 1 or k < 0:
        raise ValueError(f"poly_coeff needs dim_v >= 1 and k >= 0, got ({dim_v}, {k})")
    return math.comb(dim_v - 1 + k, dim_v - 1)


@dataclass(frozen=True)
class GradedSeries:
    coeffs: Mapping[Fraction, int]
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = Fraction(self.lo), Fraction(self.hi)
        if lo >= hi:
            raise EmptyWindow(f"empty window [{format_rat(lo)}, {format_rat(hi)})")
        clean = {}
        for e, v in self.coeffs.items():
            e = Fraction(e)
            if not lo <= e < hi:
                raise OutsideWindow(
                    f"exponent {format_rat(e)} outside [{format_rat(lo)}, {format_rat(hi)})"
                )
            if v:
                clean[e] = int(v)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "coeffs", MappingProxyType(clean))

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi) and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.lo, self.hi, frozenset(self.coeffs.items())))

    @property
    def window(self):
        return (self.lo, self.hi)

    def in_window(self, e) -> bool:
        return self.lo <= e < self.hi

    def restrict(self, lo, hi) -> "GradedSeries":
        """The same series on a sub-window of the current one."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo < self.lo or hi > self.hi:
            raise OutsideWindow("restrict() can only shrink the window")
        return GradedSeries({e: v for e, v in self.coeffs.items() if lo <= e < hi}, lo, hi)

    def exponents(self):
        return sorted(self.coeffs)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{self.coeffs[e]} * t^({format_rat(e)})" for e in self.exponents()
        )

    def __str__(self):
        return f"{self.render()}  [window {format_rat(self.lo)}, {format_rat(self.hi)})"


def coeff_at(series: GradedSeries, e) -> int:
    e = Fraction(e)
    if not series.in_window(e):
        raise OutsideWindow(
            f"exponent {format_rat(e)} is outside the certified window "
            f"[{format_rat(series.lo)}, {format_rat(series.hi)})"
        )
    return series.coeffs.get(e, 0)


def verma_series(group: GroupData, c, tau, hi, lo=None) -> GradedSeries:
    """Graded character of M(tau), certified on [h_c(tau), hi).

    M(tau) has nothing below its lowest weight, so a smaller ``lo`` may be
    passed to certify those zeros as well.
    """
    h0 = h_weight(group, c, tau)
    hi = Fraction(hi)
    if hi <= h0:
        raise EmptyWindow(f"hi={format_rat(hi)} is not above h_c({tau})={format_rat(h0)}")
    lo = h0 if lo is None else min(Fraction(lo), h0)
    dim = group.irrep(tau).dim
    n = math.ceil(hi - h0)
    return GradedSeries({h0 + k: dim * poly_coeff(group.dim_v, k) for k in range(n)}, lo, hi)


def combine(terms) -> GradedSeries:
    """Integer linear combination of series on the intersection of their windows."""
    terms = list(terms)
    if not terms:
        raise ValueError("combine() needs at least one term")
    lo = max(s.lo for _, s in terms)
    hi = min(s.hi for _, s in terms)
    if lo >= hi:
        raise EmptyWindow("input windows do not overlap")
    acc = {}
    for k, s in terms:
        for e, v in s.coeffs.items():
            if lo <= e < hi:
                acc[e] = acc.get(e, 0) + k * v
    return GradedSeries(acc, lo, hi)

"""Lowest weights h_c(tau) of the grading element on Verma modules.

For equal parameters,

    h_c(tau) = dim V / 2 - c * A(tau) / dim tau,

where A(tau) is the sum of tau over all reflections. Everything here is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MissingWeightData
from .repdata import GroupData


def h_weight(group: GroupData, c, tau) -> Fraction:
    c = Fraction(c)
    ir = group.irrep(tau)
    if ir.h_override is not None and c == group.c_ref:
        return ir.h_override
    a = group.char_sum(tau)
    if a is None:
        raise MissingWeightData(f"{tau}: no reflection character data in {group.name}")
    return Fraction(group.dim_v, 2) - c * Fraction(a, ir.dim)


def known_weights(group: GroupData, c) -> dict:
    """h_c for every listed label that carries weight data."""
    return {lab: h_weight(group, c, lab) for lab in group.labels if group.has_weight_data(lab)}


@dataclass(frozen=True)
class WindowResult:
    labels: tuple
    exhaustive: bool

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)


def labels_in_window(group: GroupData, c, lo, hi) -> WindowResult:
    """Listed labels with lo < h_c <= hi, sorted by (h_c, label).

    ``exhaustive`` says whether the data certifies that no other irrep of the
    group has its lowest weight in the window.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        return WindowResult((), True)
    hits = [(lab, h) for lab, h in known_weights(group, c).items() if lo < h <= hi]
    hits.sort(key=lambda p: (p[1], p[0]))
    return WindowResult(tuple(hits), group.is_exhaustive(c, lo, hi))

"""Column analysis of decomposition matrices.

Analysis always runs on the *Hecke view* of a column: the column stored under
label tau0 lists rows sigma whose nonzero entries say that the O-category
multiplicity [M(sigma'):L(tau0')] is nonzero, where ' is the sign twist. Files
with ``twisted_labels`` already use that view. Files without it are keyed by
category-O labels and are pulled back through the twist first.

Scanning rows of the Hecke column in increasing h_c (of the untwisted labels),
the first off-diagonal nonzero row sigma1 gives Hom(M(sigma1), M(tau0)) of
the same dimension, and hence

    [L(tau0)] = [M(tau0)] - [M(sigma1)] + (Vermas with h_c >= D)

for the bound D computed by :func:`expansion`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    AmbiguousLevel,
    IncompleteInventory,
    InvariantViolation,
    MissingTwist,
    NoWitness,
    UnsupportedExpansion,
)
from .rational import format_rat
from .repdata import DecompColumn, DecompMatrix, GroupData
from .weights import h_weight, known_weights

INF = math.inf


def _twist_column(col: DecompColumn, group: GroupData) -> DecompColumn:
    def tw(label):
        t = group.twist(label)
        if t is None:
            raise MissingTwist(f"no sign twist recorded for {label!r}")
        return t

    return DecompColumn(
        col_label=tw(col.col_label),
        entries={tw(r): m for r, m in col.entries.items()},
        rows_complete_below=col.rows_complete_below,
    )


def resolve_labels(matrix: DecompMatrix, col) -> DecompColumn:
    """Column ``col`` of the file, relabelled into category-O labels."""
    column = matrix.column(col)
    if matrix.twisted_labels:
        return _twist_column(column, matrix.group)
    return column


def analysis_column(matrix: DecompMatrix, tau0) -> DecompColumn:
    """The Hecke-view column used to study L(tau0)."""
    if matrix.twisted_labels:
        return matrix.column(tau0)
    t = matrix.group.twist(tau0)
    if t is None:
        raise MissingTwist(f"no sign twist recorded for {tau0!r}")
    return _twist_column(matrix.column(t), matrix.group)


@dataclass(frozen=True)
class HomReport:
    source: str
    source_h: Fraction
    witness: Optional[str]
    witness_h: Optional[Fraction]
    witness_mult: int
    vanishing_range: tuple

    def render(self, group: GroupData = None) -> str:
        def prime(lab):
            t = group.twist(lab) if group is not None else None
            return t if t is not None else f"{lab}'"

        lo, hi = self.vanishing_range
        lines = [
            f"source: {self.source} (h = {format_rat(self.source_h)})",
            f"Hom(M({prime(self.source)}), M(rho')) = 0 for h in "
            f"({format_rat(lo)}, {format_rat(hi)})",
        ]
        if self.witness is not None:
            lines.append(
                f"witness: {self.witness} (h = {format_rat(self.witness_h)}), "
                f"dim Hom(M({prime(self.source)}), M({prime(self.witness)})) = "
                f"{self.witness_mult}"
            )
        return "\n".join(lines)


def _certified_bound(column: DecompColumn, group: GroupData, c) -> object:
    """Largest D such that every row of ``column`` with h_c < D is known.

    Missing rows at or above rows_complete_below are unknown, unless the group
    data is exhaustive up there, in which case only missing rows that actually
    exist matter.
    """
    tau0 = column.col_label
    h0 = h_weight(group, c, tau0)
    bound = column.rows_complete_below
    if bound is None:
        raise IncompleteInventory(f"column {tau0} carries no rows_complete_below")
    if bound <= h0:
        raise IncompleteInventory(
            f"column {tau0} is only certified below {format_rat(bound)}, "
            f"not above h_c({tau0}) = {format_rat(h0)}"
        )
    if not group.is_exhaustive(c, bound, INF):
        return bound
    missing = [
        h for lab, h in known_weights(group, c).items()
        if h >= bound and lab not in column.entries
    ]
    return min(missing, default=INF)


def _scan(column: DecompColumn, group: GroupData, c):
    """Nonzero off-diagonal rows below the certified bound, ordered by (h, label)."""
    tau0 = column.col_label
    h0 = h_weight(group, c, tau0)
    cert = _certified_bound(column, group, c)
    rows = []
    for row, mult in column.entries.items():
        if row == tau0 or mult == 0:
            continue
        if not group.has_weight_data(row):
            raise IncompleteInventory(f"row {row} has no weight data; cannot order the scan")
        h = h_weight(group, c, row)
        if h <= h0:
            raise InvariantViolation(
                f"column {tau0}: nonzero row {row} at h = {format_rat(h)} "
                f"is not above h_c({tau0}) = {format_rat(h0)}"
            )
        if h < cert:
            rows.append((h, row, mult))
    rows.sort()
    return h0, cert, rows


def hom_report(matrix: DecompMatrix, col, group: GroupData, c) -> HomReport:
    """Locate the first off-diagonal nonzero row of the column of ``col``.

    Raises NoWitness when the column is diagonal up to its certified bound,
    AmbiguousLevel when two rows are nonzero at the witness level.
    """
    c = Fraction(c)
    column = analysis_column(matrix, col)
    h0, cert, rows = _scan(column, group, c)
    if not rows:
        raise NoWitness(
            f"column {col} has no off-diagonal entry below h = {format_rat(cert)}"
        )
    h1, witness, mult = rows[0]
    same_level = [r for h, r, _ in rows[1:] if h == h1]
    if same_level:
        raise AmbiguousLevel(
            f"column {col}: rows {witness} and {', '.join(same_level)} are both "
            f"nonzero at h = {format_rat(h1)}"
        )
    if (h1 - h0).denominator != 1:
        raise InvariantViolation(
            f"column {col}: witness {witness} is not an integer step above {col}"
        )
    return HomReport(
        source=col,
        source_h=h0,
        witness=witness,
        witness_h=h1,
        witness_mult=mult,
        vanishing_range=(h0, h1),
    )


@dataclass(frozen=True)
class GrothExpansion:
    target: str
    terms: tuple
    valid_below: object

    def render(self) -> str:
        parts = []
        for k, lab in self.terms:
            sign = "-" if k < 0 else "+"
            mag = "" if abs(k) == 1 else f"{abs(k)} "
            parts.append(f"{sign} {mag}M({lab})")
        body = " ".join(parts)
        body = body[2:] if body.startswith("+ ") else body
        return (
            f"L({self.target}) = {body} + (Vermas with h >= "
            f"{format_rat(self.valid_below)})"
        )


def expansion(matrix: DecompMatrix, col, group: GroupData, c) -> GrothExpansion:
    c = Fraction(c)
    column = analysis_column(matrix, col)
    try:
        report = hom_report(matrix, col, group, c)
    except NoWitness:
        return GrothExpansion(col, ((1, col),), _certified_bound(column, group, c))

    if report.witness_mult != 1:
        raise UnsupportedExpansion(
            f"column {col}: witness {report.witness} has multiplicity "
            f"{report.witness_mult}; only multiplicity one is handled"
        )
    h1 = report.witness_h
    # Chain corrections through the witness may bring in any irrep above it,
    # so D is the next weight of *any* irrep, capped by the column certificate.
    cert = _certified_bound(column, group, c)
    above = [h for h in known_weights(group, c).values() if h > h1]
    d = min([cert, *above])
    if not group.is_exhaustive(c, h1, d, include_hi=False):
        raise IncompleteInventory(
            f"cannot certify that no irrep has h in ({format_rat(h1)}, {format_rat(d)})"
        )
    _, _, rows = _scan(column, group, c)
    extra = [r for h, r, _ in rows if h1 < h < d]
    if extra:
        raise UnsupportedExpansion(
            f"column {col}: further nonzero rows {', '.join(extra)} below "
            f"h = {format_rat(d)} need a general inversion"
        )
    return GrothExpansion(col, ((1, col), (-1, report.witness)), d)

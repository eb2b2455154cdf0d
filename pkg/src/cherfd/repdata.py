"""Group representation data and decomposition-matrix columns.

Both file kinds are UTF-8 JSON. A group file looks like::

    {"name": "E8", "dim_v": 8, "num_reflections": 120, "c_ref": "1/3",
     "irreps": [{"label": "1_x", "dim": 1, "refl_char_sum": 120},
                {"label": "50_x", "dim": 50, "h_override": "-12"}],
     "sign_twist": {"1_x": "1_x'", "50_x": "50_x'"},
     "inventory_complete_on": ["0", "2"],
     "complete": false}

``refl_char_sum`` is the sum of the character over all reflections. An
``h_override`` is a lowest weight stated at ``c_ref``; the character sum is
recovered from it and must come out integral. ``complete`` marks a file that
lists every irreducible of the group.

A decomposition file looks like::

    {"group": "E8", "twisted_labels": true,
     "columns": {"50_x": {"entries": {"50_x": 1, "700_xx": 1},
                          "rows_complete_below": "2"}}}

Rows missing from a column are zero below ``rows_complete_below`` and unknown
at or above it.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Optional

from .errors import (
    BadDiagonal,
    DuplicateLabel,
    InvariantViolation,
    ParseError,
    UnknownLabel,
)
from .rational import format_rat, parse_rat

IrrepLabel = str


@dataclass(frozen=True)
class IrrepData:
    label: IrrepLabel
    dim: int
    refl_char_sum: Optional[int] = None
    h_override: Optional[Fraction] = None


@dataclass(frozen=True, eq=False)
class GroupData:
    name: str
    dim_v: int
    num_reflections: int
    irreps: tuple
    sign_twist: Mapping[str, str]
    c_ref: Optional[Fraction] = None
    inventory_complete_on: Optional[tuple] = None
    complete: bool = False
    _by_label: Mapping[str, IrrepData] = field(default=None, init=False, repr=False)
    _char_sums: Mapping[str, int] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "irreps", tuple(self.irreps))
        by_label = {}
        for ir in self.irreps:
            if ir.label in by_label:
                raise DuplicateLabel(f"duplicate irrep label {ir.label!r}")
            by_label[ir.label] = ir
        object.__setattr__(self, "_by_label", MappingProxyType(by_label))
        object.__setattr__(self, "sign_twist", MappingProxyType(_close_twist(self.sign_twist)))
        object.__setattr__(self, "_char_sums", MappingProxyType(self._derive_char_sums()))
        self._validate()

    def __eq__(self, other):
        if not isinstance(other, GroupData):
            return NotImplemented
        return dump_group(self) == dump_group(other)

    def __hash__(self):
        return hash((self.name, self.dim_v, self.num_reflections, self.irreps))

    @property
    def labels(self):
        return [ir.label for ir in self.irreps]

    def irrep(self, label) -> IrrepData:
        try:
            return self._by_label[label]
        except KeyError:
            raise UnknownLabel(f"{label!r} is not an irrep of {self.name}") from None

    def __contains__(self, label):
        return label in self._by_label

    def char_sum(self, label) -> Optional[int]:
        """Sum of the character of ``label`` over all reflections, or None."""
        self.irrep(label)
        return self._char_sums.get(label)

    def twist(self, label) -> Optional[str]:
        return self.sign_twist.get(label)

    def has_weight_data(self, label) -> bool:
        return label in self._char_sums

    def is_exhaustive(self, c, lo, hi, include_hi=True) -> bool:
        """True if every irrep with lo < h_c <= hi is listed with weight data.

        With ``include_hi=False`` the interval is open at ``hi``. A file
        marked complete with weight data everywhere qualifies for all c; the
        ``inventory_complete_on`` assertion (an open interval) only speaks
        about c_ref.
        """
        if lo >= hi:
            return True
        if self.complete and len(self._char_sums) == len(self.irreps):
            return True
        if self.inventory_complete_on is None or self.c_ref is None:
            return False
        if Fraction(c) != self.c_ref:
            return False
        inv_lo, inv_hi = self.inventory_complete_on
        if inv_lo > lo:
            return False
        return hi < inv_hi if include_hi else hi <= inv_hi

    def _derive_char_sums(self):
        sums = {}
        for ir in self.irreps:
            if ir.refl_char_sum is not None:
                sums[ir.label] = ir.refl_char_sum
            elif ir.h_override is not None:
                if self.c_ref is None or self.c_ref == 0:
                    raise InvariantViolation(
                        f"{ir.label}: h_override needs a nonzero c_ref"
                    )
                a = (Fraction(self.dim_v, 2) - ir.h_override) * ir.dim / self.c_ref
                if a.denominator != 1:
                    raise InvariantViolation(
                        f"{ir.label}: h_override {format_rat(ir.h_override)} gives "
                        f"non-integral reflection character sum {format_rat(a)}"
                    )
                sums[ir.label] = a.numerator
        return sums

    def _validate(self):
        if self.dim_v < 1 or self.num_reflections < 1:
            raise InvariantViolation("dim_v and num_reflections must be positive")
        for ir in self.irreps:
            if not ir.label:
                raise InvariantViolation("empty irrep label")
            if ir.dim < 1:
                raise InvariantViolation(f"{ir.label}: dimension must be positive")
            if ir.refl_char_sum is not None and ir.h_override is not None:
                raise InvariantViolation(
                    f"{ir.label}: give refl_char_sum or h_override, not both"
                )
            a = self._char_sums.get(ir.label)
            if a is not None and abs(a) > self.num_reflections * ir.dim:
                raise InvariantViolation(
                    f"{ir.label}: |reflection character sum| {abs(a)} exceeds "
                    f"{self.num_reflections} * {ir.dim}"
                )
        for a, b in self.sign_twist.items():
            if a in self and b in self:
                if self.irrep(a).dim != self.irrep(b).dim:
                    raise InvariantViolation(f"sign twist {a} -> {b} changes dimension")
                sa, sb = self._char_sums.get(a), self._char_sums.get(b)
                if sa is not None and sb is not None and sa + sb != 0:
                    raise InvariantViolation(
                        f"sign twist {a} -> {b}: reflection sums {sa} and {sb} "
                        "do not cancel"
                    )
        if self.inventory_complete_on is not None:
            lo, hi = self.inventory_complete_on
            if lo >= hi:
                raise InvariantViolation("inventory_complete_on must have lo < hi")


def _close_twist(mapping):
    """Complete a partially specified involution; conflicts are errors."""
    out = {}
    for a, b in mapping.items():
        for x, y in ((a, b), (b, a)):
            if out.get(x, y) != y:
                raise InvariantViolation(
                    f"sign twist is not an involution: {x} -> {out[x]} and {x} -> {y}"
                )
            out[x] = y
    return out


@dataclass(frozen=True)
class DecompColumn:
    col_label: IrrepLabel
    entries: Mapping[str, int]
    rows_complete_below: Optional[Fraction] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        for row, mult in self.entries.items():
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 0:
                raise InvariantViolation(
                    f"column {self.col_label}, row {row}: entry {mult!r} is not a "
                    "nonnegative integer"
                )
        if self.entries.get(self.col_label) != 1:
            raise BadDiagonal(
                f"column {self.col_label} has diagonal entry "
                f"{self.entries.get(self.col_label, 0)}, expected 1"
            )

    def __eq__(self, other):
        if not isinstance(other, DecompColumn):
            return NotImplemented
        return (
            self.col_label == other.col_label
            and dict(self.entries) == dict(other.entries)
            and self.rows_complete_below == other.rows_complete_below
        )

    def __hash__(self):
        return hash((self.col_label, tuple(sorted(self.entries.items()))))

    def entry(self, row):
        """Multiplicity at ``row``; None when the row is uncertified."""
        if row in self.entries:
            return self.entries[row]
        return None


@dataclass(frozen=True)
class DecompMatrix:
    group: GroupData
    columns: Mapping[str, DecompColumn]
    twisted_labels: bool = False

    def __post_init__(self):
        object.__setattr__(self, "columns", MappingProxyType(dict(self.columns)))

    def column(self, label) -> DecompColumn:
        try:
            return self.columns[label]
        except KeyError:
            raise UnknownLabel(f"no column {label!r} in decomposition data") from None


# -- ingestion ---------------------------------------------------------------

def _require(obj, key, where):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise ParseError(f"{where}: missing field {key!r}") from None


def _int_field(value, where):
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected integer, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise ParseError(f"{where}: expected integer, got {value!r}")


def _rat_field(value, where):
    try:
        return parse_rat(value)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def group_from_dict(doc) -> GroupData:
    if not isinstance(doc, dict):
        raise ParseError("group file must hold a JSON object")
    irreps = []
    raw_irreps = _require(doc, "irreps", "group")
    if not isinstance(raw_irreps, list):
        raise ParseError("group: 'irreps' must be a list")
    for i, raw in enumerate(raw_irreps):
        where = f"irreps[{i}]"
        label = _require(raw, "label", where)
        if not isinstance(label, str):
            raise ParseError(f"{where}: label must be a string")
        a = raw.get("refl_char_sum")
        h = raw.get("h_override")
        irreps.append(IrrepData(
            label=label,
            dim=_int_field(_require(raw, "dim", where), where + ".dim"),
            refl_char_sum=None if a is None else _int_field(a, where + ".refl_char_sum"),
            h_override=None if h is None else _rat_field(h, where + ".h_override"),
        ))
    twist = doc.get("sign_twist", {})
    if not isinstance(twist, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in twist.items()
    ):
        raise ParseError("group: 'sign_twist' must map labels to labels")
    inv = doc.get("inventory_complete_on")
    if inv is not None:
        if not isinstance(inv, list) or len(inv) != 2:
            raise ParseError("group: 'inventory_complete_on' must be [lo, hi]")
        inv = tuple(_rat_field(x, "inventory_complete_on") for x in inv)
    c_ref = doc.get("c_ref")
    complete = doc.get("complete", False)
    if not isinstance(complete, bool):
        raise ParseError("group: 'complete' must be a boolean")
    name = _require(doc, "name", "group")
    if not isinstance(name, str):
        raise ParseError("group: 'name' must be a string")
    return GroupData(
        name=name,
        dim_v=_int_field(_require(doc, "dim_v", "group"), "dim_v"),
        num_reflections=_int_field(
            _require(doc, "num_reflections", "group"), "num_reflections"
        ),
        irreps=tuple(irreps),
        sign_twist=twist,
        c_ref=None if c_ref is None else _rat_field(c_ref, "c_ref"),
        inventory_complete_on=inv,
        complete=complete,
    )


def dump_group(group: GroupData) -> dict:
    irreps = []
    for ir in group.irreps:
        d = {"label": ir.label, "dim": ir.dim}
        if ir.refl_char_sum is not None:
            d["refl_char_sum"] = ir.refl_char_sum
        if ir.h_override is not None:
            d["h_override"] = format_rat(ir.h_override)
        irreps.append(d)
    doc = {
        "name": group.name,
        "dim_v": group.dim_v,
        "num_reflections": group.num_reflections,
        "irreps": irreps,
        "sign_twist": dict(sorted(group.sign_twist.items())),
        "complete": group.complete,
    }
    if group.c_ref is not None:
        doc["c_ref"] = format_rat(group.c_ref)
    if group.inventory_complete_on is not None:
        doc["inventory_complete_on"] = [format_rat(x) for x in group.inventory_complete_on]
    return doc


def load_group(path) -> GroupData:
    """Load and validate a group file."""
    return group_from_dict(_read_json(path))


def save_group(group: GroupData, path) -> None:
    Path(path).write_text(json.dumps(dump_group(group), indent=2) + "\n", encoding="utf-8")


def decomp_from_dict(doc, group: GroupData) -> DecompMatrix:
    if not isinstance(doc, dict):
        raise ParseError("decomposition file must hold a JSON object")
    twisted = doc.get("twisted_labels", False)
    if not isinstance(twisted, bool):
        raise ParseError("'twisted_labels' must be a boolean")
    gname = doc.get("group")
    if gname is not None and gname != group.name:
        raise ParseError(f"decomposition data is for {gname!r}, not {group.name!r}")
    raw_cols = _require(doc, "columns", "decomposition")
    if not isinstance(raw_cols, dict):
        raise ParseError("'columns' must be an object")
    columns = {}
    for col, raw in raw_cols.items():
        where = f"columns[{col}]"
        entries = _require(raw, "entries", where)
        if not isinstance(entries, dict):
            raise ParseError(f"{where}: 'entries' must be an object")
        parsed = {row: _int_field(v, f"{where}.{row}") for row, v in entries.items()}
        for lab in [col, *parsed]:
            if lab not in group:
                raise UnknownLabel(f"{where}: label {lab!r} not in group {group.name}")
        rcb = raw.get("rows_complete_below")
        columns[col] = DecompColumn(
            col_label=col,
            entries=parsed,
            rows_complete_below=None if rcb is None else _rat_field(rcb, where),
        )
    return DecompMatrix(group=group, columns=columns, twisted_labels=twisted)


def dump_decomp(matrix: DecompMatrix) -> dict:
    cols = {}
    for label, col in matrix.columns.items():
        d = {"entries": dict(col.entries)}
        if col.rows_complete_below is not None:
            d["rows_complete_below"] = format_rat(col.rows_complete_below)
        cols[label] = d
    return {"group": matrix.group.name, "twisted_labels": matrix.twisted_labels,
            "columns": cols}


def load_decomp(path, group: GroupData) -> DecompMatrix:
    """Load a decomposition file whose labels must all belong to ``group``."""
    return decomp_from_dict(_read_json(path), group)

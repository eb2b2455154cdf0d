"""Exact lowest weights, truncated graded characters and the sl2
finite-dimensionality obstruction for rational Cherednik algebras."""
from .decomp import GrothExpansion, HomReport, expansion, hom_report, resolve_labels
from .findim import Verdict, VerdictKind, classify, simple_character, sl2_symmetry_test
from .gseries import GradedSeries, coeff_at, combine, poly_coeff, verma_series
from .rational import format_rat, parse_rat
from .repdata import (
    DecompColumn,
    DecompMatrix,
    GroupData,
    IrrepData,
    dump_group,
    load_decomp,
    load_group,
    save_group,
)
from .weights import h_weight, labels_in_window

__all__ = [
    "DecompColumn", "DecompMatrix", "GradedSeries", "GrothExpansion", "GroupData",
    "HomReport", "IrrepData", "Verdict", "VerdictKind", "classify", "coeff_at",
    "combine", "dump_group", "expansion", "format_rat", "h_weight", "hom_report",
    "labels_in_window", "load_decomp", "load_group", "parse_rat", "poly_coeff",
    "resolve_labels", "save_group", "simple_character", "sl2_symmetry_test",
    "verma_series",
]

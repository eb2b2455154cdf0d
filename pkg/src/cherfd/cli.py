"""Command-line front end.

Exit codes: 0 success (or INFINITE-DIMENSIONAL for ``findim``), 1 INCONCLUSIVE
or an undetermined classification, 2 dataset error, 3 unknown label,
4 unsupported expansion or incomplete inventory, 5 ``verify-e8`` mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources
from pathlib import Path

from . import errors
from .decomp import expansion
from .findim import UNTESTED, classify, simple_character, sl2_symmetry_test
from .gseries import coeff_at, verma_series
from .rational import format_rat, parse_rat
from .repdata import _read_json, load_decomp, load_group
from .weights import h_weight

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_DATASET = 2
EXIT_UNKNOWN_LABEL = 3
EXIT_UNSUPPORTED = 4
EXIT_MISMATCH = 5

BUNDLED_GROUP = "e8_c13_paper.json"
BUNDLED_DECOMP = "e8_c13_paper_decomp.json"
BUNDLED_CANDIDATES = "e8_c13_candidates.json"
BUNDLED_EXPECTED = "e8_c13_expected.json"

_ANALYSIS_ERRORS = (
    errors.UnsupportedExpansion,
    errors.IncompleteInventory,
    errors.AmbiguousLevel,
    errors.MissingTwist,
    errors.MissingWeightData,
    errors.EmptyWindow,
)


class CliExit(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def data_dir() -> Path:
    override = os.environ.get("CHERFD_DATA")
    if override:
        return Path(override)
    return Path(str(resources.files("cherfd") / "data"))


def resolve_path(name) -> Path:
    p = Path(name)
    if p.exists() or p.is_absolute():
        return p
    return data_dir() / name


def _rat_arg(text):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- output ------------------------------------------------------------------

class Report:
    def __init__(self, mode):
        self.mode = mode
        self.lines = []
        self.record = {}

    def line(self, text):
        self.lines.append(text)

    def emit(self, out):
        if self.mode == "text":
            for ln in self.lines:
                print(ln, file=out)
        else:
            json.dump(self.record, out, indent=2, sort_keys=True)
            out.write("\n")


def _series_record(series):
    return {
        "window": [format_rat(series.lo), format_rat(series.hi)],
        "coeffs": {format_rat(e): str(series.coeffs[e]) for e in series.exponents()},
    }


def _verdict_record(v):
    rec = {"kind": v.kind.value}
    if v.window is not None:
        rec["window"] = [format_rat(x) for x in v.window]
    if v.infinite:
        rec.update(
            witness_exponent=format_rat(v.witness_exponent),
            dim_neg=str(v.dim_neg),
            dim_pos=str(v.dim_pos),
        )
    return rec


def _expansion_record(exp):
    return {
        "terms": [[str(k), lab] for k, lab in exp.terms],
        "valid_below": format_rat(exp.valid_below),
    }


# -- loading -----------------------------------------------------------------

def _load(args, need_decomp=False):
    try:
        group = load_group(resolve_path(args.group))
        matrix = load_decomp(resolve_path(args.decomp), group) if need_decomp else None
    except (errors.DatasetError, errors.UnknownLabel) as exc:
        raise CliExit(EXIT_DATASET, f"dataset error: {exc}") from None
    c = args.c if args.c is not None else group.c_ref
    if c is None:
        raise CliExit(EXIT_DATASET, "no --c given and the dataset has no c_ref")
    return group, matrix, c


def _check_label(group, label):
    if label not in group:
        raise CliExit(EXIT_UNKNOWN_LABEL, f"unknown label {label!r}")


# -- commands ----------------------------------------------------------------

def cmd_hweight(args, rep):
    group, _, c = _load(args)
    for lab in args.labels:
        _check_label(group, lab)
    rep.record = {"c": format_rat(c), "h": {}}
    for lab in args.labels:
        try:
            h = h_weight(group, c, lab)
        except errors.MissingWeightData as exc:
            raise CliExit(EXIT_DATASET, str(exc)) from None
        rep.line(f"{lab}: {format_rat(h)}")
        rep.record["h"][lab] = format_rat(h)
    return EXIT_OK


def cmd_verma_char(args, rep):
    group, _, c = _load(args)
    _check_label(group, args.label)
    if args.hi is None:
        raise CliExit(EXIT_DATASET, "verma-char needs --hi")
    series = verma_series(group, c, args.label, args.hi)
    rep.line(f"ch M({args.label}) = {series}")
    rep.record = {"label": args.label, "c": format_rat(c), "series": _series_record(series)}
    return EXIT_OK


def _findim_pipeline(group, matrix, c, label, hi):
    exp = expansion(matrix, label, group, c)
    series = simple_character(group, c, matrix, label, truncation_hi=hi)
    return exp, series, sl2_symmetry_test(series)


def cmd_simple_char(args, rep):
    group, matrix, c = _load(args, need_decomp=True)
    _check_label(group, args.label)
    exp, series, _ = _findim_pipeline(group, matrix, c, args.label, args.hi)
    rep.line(exp.render())
    rep.line(f"ch L({args.label}) = {series}")
    rep.record = {
        "label": args.label,
        "c": format_rat(c),
        "expansion": _expansion_record(exp),
        "series": _series_record(series),
    }
    return EXIT_OK


def cmd_findim(args, rep):
    group, matrix, c = _load(args, need_decomp=True)
    _check_label(group, args.label)
    exp, series, verdict = _findim_pipeline(group, matrix, c, args.label, args.hi)
    rep.line(exp.render())
    rep.line(f"ch L({args.label}) = {series}")
    rep.line(verdict.render(args.label))
    rep.record = {
        "label": args.label,
        "c": format_rat(c),
        "expansion": _expansion_record(exp),
        "series": _series_record(series),
        "verdict": _verdict_record(verdict),
    }
    return EXIT_OK if verdict.infinite else EXIT_INCONCLUSIVE


def _test_candidates(group, matrix, c, candidates, hi=None):
    verdicts = {}
    for lab in candidates:
        try:
            series = simple_character(group, c, matrix, lab, truncation_hi=hi)
        except (errors.UnknownLabel, *_ANALYSIS_ERRORS):
            verdicts[lab] = UNTESTED
            continue
        verdicts[lab] = sl2_symmetry_test(series)
    return verdicts


def cmd_classify(args, rep):
    group, matrix, c = _load(args, need_decomp=True)
    try:
        doc = _read_json(resolve_path(args.candidates))
        candidates = doc["candidates"] if isinstance(doc, dict) else doc
        expected = args.expect if args.expect is not None else doc.get("expected_count")
    except (errors.DatasetError, KeyError, AttributeError) as exc:
        raise CliExit(EXIT_DATASET, f"bad candidates file: {exc}") from None
    if expected is None:
        raise CliExit(EXIT_DATASET, "no --expect given and none in the candidates file")
    for lab in candidates:
        _check_label(group, lab)
    verdicts = _test_candidates(group, matrix, c, candidates, args.hi)
    for lab in candidates:
        rep.line(verdicts[lab].render(lab))
    rep.record = {"verdicts": {lab: _verdict_record(v) for lab, v in verdicts.items()}}
    try:
        result = classify(candidates, int(expected), verdicts)
    except errors.CountMismatch as exc:
        rep.line(f"indeterminate: {exc}")
        rep.record["indeterminate"] = exc.remainder
        return EXIT_INCONCLUSIVE
    rep.line("classification: " + " ".join(result))
    rep.record["classification"] = result
    return EXIT_OK


def cmd_verify_e8(args, rep):
    ddir = data_dir()
    try:
        group = load_group(ddir / BUNDLED_GROUP)
        matrix = load_decomp(ddir / BUNDLED_DECOMP, group)
        cand = _read_json(ddir / BUNDLED_CANDIDATES)
        expected = _read_json(ddir / BUNDLED_EXPECTED)
        c = parse_rat(expected["c"])
        target = expected["label"]
        candidates, expected_count = cand["candidates"], int(cand["expected_count"])
    except (errors.DatasetError, errors.UnknownLabel, KeyError, TypeError, ValueError) as exc:
        raise CliExit(EXIT_DATASET, f"bundled data unusable: {exc}") from None

    got = {"c": format_rat(c), "label": target}
    got["h"] = {lab: format_rat(h_weight(group, c, lab)) for lab in expected["h"]}
    for lab, h in got["h"].items():
        rep.line(f"h_c({lab}) = {h}")

    exp = expansion(matrix, target, group, c)
    got["expansion"] = [[k, lab] for k, lab in exp.terms]
    got["valid_below"] = format_rat(exp.valid_below)
    rep.line(exp.render())

    series = simple_character(group, c, matrix, target)
    got["graded_dims"] = {e: str(coeff_at(series, parse_rat(e))) for e in expected["graded_dims"]}
    for e, v in got["graded_dims"].items():
        rep.line(f"dim L({target})[{e}] = {v}")

    verdict = sl2_symmetry_test(series)
    got["verdict"] = {k: v for k, v in _verdict_record(verdict).items() if k != "window"}
    rep.line(verdict.render(target))

    verdicts = _test_candidates(group, matrix, c, candidates)
    try:
        got["classification"] = classify(candidates, expected_count, verdicts)
    except errors.CountMismatch as exc:
        got["classification"] = None
        rep.line(f"indeterminate: {exc}")
    else:
        rep.line("classification: " + " ".join(got["classification"]))

    mismatches = [key for key in expected if got.get(key) != expected[key]]
    rep.record = {"results": got, "mismatches": mismatches, "ok": not mismatches}
    if mismatches:
        rep.line("MISMATCH: " + ", ".join(mismatches))
        return EXIT_MISMATCH
    return EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="cherfd", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, decomp=False, hi=False):
        sp.add_argument("--group", default=BUNDLED_GROUP)
        if decomp:
            sp.add_argument("--decomp", default=BUNDLED_DECOMP)
        sp.add_argument("--c", type=_rat_arg, default=None)
        if hi:
            sp.add_argument("--hi", type=_rat_arg, default=None)
        sp.add_argument("--output", choices=["text", "machine-readable", "json"], default="text")

    sp = sub.add_parser("hweight", help="lowest weights h_c")
    common(sp)
    sp.add_argument("labels", nargs="+")
    sp.set_defaults(func=cmd_hweight)

    sp = sub.add_parser("verma-char", help="truncated character of a Verma module")
    common(sp, hi=True)
    sp.add_argument("label")
    sp.set_defaults(func=cmd_verma_char)

    sp = sub.add_parser("simple-char", help="truncated character of a simple module")
    common(sp, decomp=True, hi=True)
    sp.add_argument("label")
    sp.set_defaults(func=cmd_simple_char)

    sp = sub.add_parser("findim", help="run the sl2 obstruction on L(label)")
    common(sp, decomp=True, hi=True)
    sp.add_argument("label")
    sp.set_defaults(func=cmd_findim)

    sp = sub.add_parser("classify", help="classify candidates against an expected count")
    common(sp, decomp=True, hi=True)
    sp.add_argument("--expect", type=int, default=None)
    sp.add_argument("candidates")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify-e8", help="reproduce the E8, c = 1/3 result from bundled data")
    sp.add_argument("--output", choices=["text", "machine-readable", "json"], default="text")
    sp.set_defaults(func=cmd_verify_e8)
    return p


def _glue_negative_values(argv):
    # argparse takes "-1/2" for a flag; rewrite "--c -1/2" as "--c=-1/2"
    out, it = [], iter(argv)
    for tok in it:
        if tok in _RAT_OPTIONS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


_RAT_OPTIONS = ("--c", "--hi")


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    rep = Report("text" if args.output == "text" else "json")
    try:
        code = args.func(args, rep)
    except CliExit as exc:
        print(f"cherfd: {exc}", file=sys.stderr)
        return exc.code
    except errors.UnknownLabel as exc:
        print(f"cherfd: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_LABEL
    except _ANALYSIS_ERRORS as exc:
        print(f"cherfd: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except errors.DatasetError as exc:
        print(f"cherfd: dataset error: {exc}", file=sys.stderr)
        return EXIT_DATASET
    rep.emit(out)
    return code


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

import copy
import json
from fractions import Fraction

import pytest

from cherfd.errors import (
    BadDiagonal,
    DuplicateLabel,
    InvariantViolation,
    ParseError,
    UnknownLabel,
)
from cherfd.repdata import (
    DecompColumn,
    dump_decomp,
    dump_group,
    load_decomp,
    load_group,
    save_group,
)

from conftest import DATA, S2_GROUP, TRIVIAL_DECOMP, TRIVIAL_GROUP


def minimal_group(**overrides):
    doc = {
        "name": "G",
        "dim_v": 8,
        "num_reflections": 120,
        "irreps": [{"label": "1_x", "dim": 1, "refl_char_sum": 120}],
        "sign_twist": {},
    }
    doc.update(overrides)
    return doc


class TestLoadGroup:
    def test_bundled_e8(self, e8):
        assert e8.dim_v == 8
        assert e8.num_reflections == 120
        assert e8.c_ref == Fraction(1, 3)
        assert e8.inventory_complete_on == (0, 2)
        assert not e8.complete

    def test_bundled_dims_follow_names(self, e8):
        for lab in e8.labels:
            assert e8.irrep(lab).dim == int(lab.split("_")[0])

    def test_bundled_back_solved_sums(self, e8):
        # (4 - h) * dim / (1/3)
        assert e8.char_sum("50_x") == 16 * 50 * 3
        assert e8.char_sum("700_xx") == 4 * 700 * 3
        assert e8.char_sum("8_z") == 720
        assert e8.char_sum("28_x") is None

    def test_minimal(self, write_json):
        g = load_group(write_json(minimal_group()))
        assert g.labels == ["1_x"]
        assert g.char_sum("1_x") == 120

    def test_broken_involution(self, write_json):
        doc = minimal_group(sign_twist={"a": "b", "b": "c"})
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_one_sided_twist_is_completed(self, write_json):
        g = load_group(write_json(copy.deepcopy(S2_GROUP)))
        assert g.twist("sign") == "triv"
        assert g.twist("triv") == "sign"

    def test_duplicate_label(self, write_json):
        doc = minimal_group(irreps=[{"label": "a", "dim": 1, "refl_char_sum": 1}] * 2)
        with pytest.raises(DuplicateLabel):
            load_group(write_json(doc))

    @pytest.mark.parametrize("bad", ["{", "[]", '{"name": "G"}', "\xff"])
    def test_parse_errors(self, tmp_path, bad):
        p = tmp_path / "g.json"
        p.write_text(bad, encoding="latin-1")
        with pytest.raises(ParseError):
            load_group(p)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            load_group(tmp_path / "nope.json")

    @pytest.mark.parametrize("value", ["0.5", 0.5, True, "1/0", "x"])
    def test_rejects_inexact_rationals(self, write_json, value):
        doc = minimal_group(c_ref=value)
        with pytest.raises(ParseError):
            load_group(write_json(doc))

    def test_big_integers_survive(self, write_json):
        big = 10**40
        doc = minimal_group(
            num_reflections=str(big),
            irreps=[{"label": "a", "dim": "3", "refl_char_sum": str(big)}],
        )
        g = load_group(write_json(doc))
        assert g.char_sum("a") == big
        assert g.num_reflections == big

    def test_both_weight_sources_rejected(self, write_json):
        doc = minimal_group(
            c_ref="1/3",
            irreps=[{"label": "a", "dim": 1, "refl_char_sum": 0, "h_override": "4"}],
        )
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_character_bound(self, write_json):
        doc = minimal_group(irreps=[{"label": "a", "dim": 2, "refl_char_sum": 241}])
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_non_integral_override(self, write_json):
        # (4 - 1/2) * 1 * 3 = 21/2
        doc = minimal_group(c_ref="1/3", irreps=[{"label": "a", "dim": 1, "h_override": "1/2"}])
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_override_needs_c_ref(self, write_json):
        doc = minimal_group(irreps=[{"label": "a", "dim": 1, "h_override": "0"}])
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_twist_must_preserve_dimension(self, write_json):
        doc = minimal_group(
            irreps=[{"label": "a", "dim": 1, "refl_char_sum": 1},
                    {"label": "b", "dim": 2, "refl_char_sum": -1}],
            sign_twist={"a": "b"},
        )
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_twist_must_negate_reflection_sum(self, write_json):
        doc = minimal_group(
            irreps=[{"label": "a", "dim": 1, "refl_char_sum": 1},
                    {"label": "b", "dim": 1, "refl_char_sum": 1}],
            sign_twist={"a": "b"},
        )
        with pytest.raises(InvariantViolation):
            load_group(write_json(doc))

    def test_unknown_lookup(self, e8):
        with pytest.raises(UnknownLabel):
            e8.irrep("bogus")

    def test_round_trip(self, e8, tmp_path):
        p = tmp_path / "out.json"
        save_group(e8, p)
        again = load_group(p)
        assert again == e8
        assert dump_group(again) == dump_group(e8)


class TestLoadDecomp:
    def test_bundled_column(self, e8_matrix):
        col = e8_matrix.column("50_x")
        assert dict(col.entries) == {"50_x": 1, "700_xx": 1}
        assert col.rows_complete_below == 2
        assert e8_matrix.twisted_labels

    def test_identity(self, write_json):
        g = load_group(write_json(TRIVIAL_GROUP, "g.json"))
        m = load_decomp(write_json(TRIVIAL_DECOMP, "d.json"), g)
        assert dict(m.column("1").entries) == {"1": 1}

    def test_missing_diagonal(self, e8, write_json):
        doc = {"group": "E8", "twisted_labels": True,
               "columns": {"50_x": {"entries": {"700_xx": 1}}}}
        with pytest.raises(BadDiagonal):
            load_decomp(write_json(doc), e8)

    def test_diagonal_not_one(self):
        with pytest.raises(BadDiagonal):
            DecompColumn("a", {"a": 2})

    def test_unknown_row(self, e8, write_json):
        doc = {"columns": {"50_x": {"entries": {"50_x": 1, "nope": 1}}}}
        with pytest.raises(UnknownLabel):
            load_decomp(write_json(doc), e8)

    def test_wrong_group(self, e8, write_json):
        doc = {"group": "F4", "columns": {}}
        with pytest.raises(ParseError):
            load_decomp(write_json(doc), e8)

    @pytest.mark.parametrize("entry", [-1, "x", 1.5])
    def test_bad_entries(self, e8, write_json, entry):
        doc = {"columns": {"50_x": {"entries": {"50_x": 1, "700_xx": entry}}}}
        with pytest.raises((ParseError, InvariantViolation)):
            load_decomp(write_json(doc), e8)

    def test_absent_rows_are_uncertified(self, e8_matrix):
        col = e8_matrix.column("50_x")
        assert col.entry("700_xx") == 1
        assert col.entry("1_x") is None

    def test_dump(self, e8_matrix):
        with open(DATA / "e8_c13_paper_decomp.json") as fh:
            assert dump_decomp(e8_matrix) == json.load(fh)

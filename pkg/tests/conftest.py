import json
from pathlib import Path

import pytest

from cherfd.repdata import group_from_dict, decomp_from_dict, load_decomp, load_group

DATA = Path(__file__).resolve().parents[1] / "src" / "cherfd" / "data"

S2_GROUP = {
    "name": "S2",
    "dim_v": 1,
    "num_reflections": 1,
    "irreps": [
        {"label": "triv", "dim": 1, "refl_char_sum": 1},
        {"label": "sign", "dim": 1, "refl_char_sum": -1},
    ],
    "sign_twist": {"triv": "sign"},
    "complete": True,
}

S2_DECOMP = {
    "group": "S2",
    "twisted_labels": True,
    "columns": {
        "triv": {"entries": {"triv": 1, "sign": 1}, "rows_complete_below": "2"},
        "sign": {"entries": {"sign": 1}, "rows_complete_below": "2"},
    },
}

TRIVIAL_GROUP = {
    "name": "A0",
    "dim_v": 1,
    "num_reflections": 1,
    "irreps": [{"label": "1", "dim": 1, "refl_char_sum": 0}],
    "sign_twist": {"1": "1"},
    "complete": True,
}

TRIVIAL_DECOMP = {
    "group": "A0",
    "twisted_labels": True,
    "columns": {"1": {"entries": {"1": 1}, "rows_complete_below": "1"}},
}

E8_CANDIDATES = ["1_x", "8_z", "28_x", "35_x", "50_x", "160_z", "175_x", "300_x", "840_z"]
E8_CLASSIFICATION = ["1_x", "8_z", "28_x", "35_x", "160_z", "175_x", "300_x", "840_z"]


@pytest.fixture(scope="session")
def e8():
    return load_group(DATA / "e8_c13_paper.json")


@pytest.fixture(scope="session")
def e8_matrix(e8):
    return load_decomp(DATA / "e8_c13_paper_decomp.json", e8)


@pytest.fixture
def s2():
    return group_from_dict(S2_GROUP)


@pytest.fixture
def s2_matrix(s2):
    return decomp_from_dict(S2_DECOMP, s2)


@pytest.fixture
def write_json(tmp_path):
    def _write(doc, name="data.json"):
        p = tmp_path / name
        p.write_text(json.dumps(doc), encoding="utf-8")
        return p
    return _write


_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_ACCEPTANCE.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")

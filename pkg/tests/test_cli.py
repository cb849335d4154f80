import json

import pytest
from hypothesis import given, strategies as st

from grosimp.cli import main
from grosimp.errors import WorkspaceError
from grosimp.simplicial import truncate
from grosimp.util import encode_id
from grosimp.workspace import Workspace, decode_id

# identifiers as the package builds them: ints, strings, bools, and
# tuples/frozensets of those
atoms = (st.integers(-50, 50) | st.booleans()
         | st.text(min_size=0, max_size=6))
identifiers = st.recursive(
    atoms,
    lambda inner: (st.lists(inner, max_size=3).map(tuple)
                   | st.lists(inner, max_size=3).map(frozenset)),
    max_leaves=8,
)


@given(identifiers)
def test_identifier_codec_round_trips(x):
    assert decode_id(encode_id(x)) == x


def test_decode_rejects_malformed():
    for bad in ["(0,1", "'open", "", "(0,1))", "0 1", "(,)"]:
        with pytest.raises(WorkspaceError):
            decode_id(bad)


def test_decode_tolerates_whitespace_and_trailing_commas():
    assert decode_id(" ( 0 , 1 ) ") == (0, 1)
    assert decode_id("(0,)") == (0,)
    assert decode_id("{ 1 , 2 }") == frozenset([1, 2])


# ---------------------------------------------------------------------------
# workspace round trips
# ---------------------------------------------------------------------------

BASE_DOC = {
    "schema": 1,
    "dim_bound": 4,
    "budget": None,
    "categories": {"T": {"kind": "terminal"},
                   "three": {"kind": "chain", "length": 2}},
    "simplicial_sets": {"pt": {"generator": "delta 0"},
                        "seg": {"generator": "delta 1"}},
    "marked_sets": {"M": {"space": "seg", "marking": "flat"}},
    "maps": {"pp": {"source": "pt", "target": "pt", "identity": True}},
    "diagrams": {"F": {"base": "three", "marked": False,
                       "values": {"0": "pt", "1": "pt", "2": "pt"},
                       "maps": {"(0,1)": "pp", "(1,2)": "pp",
                                "(0,2)": "pp"}}},
}


@pytest.fixture
def ws_path(tmp_path):
    path = tmp_path / "ws.json"
    path.write_text(json.dumps(BASE_DOC, indent=2))
    return str(path)


def test_emit_parse_is_the_identity_on_canonical_form():
    ws = Workspace.parse(json.dumps(BASE_DOC))
    canonical = ws.emit()
    assert Workspace.parse(canonical).emit() == canonical


def test_emitted_objects_rebuild_equal(seg):
    ws = Workspace.parse(json.dumps(BASE_DOC))
    ws.add_space("explicit", seg)
    reloaded = Workspace.parse(ws.emit())
    assert reloaded.space("explicit") == seg
    # generated spaces pick up the workspace bound, explicit ones keep theirs
    assert reloaded.space("seg").dim_bound == 4
    assert truncate(reloaded.space("seg"), 3) == seg


def test_unknown_reference_is_a_parse_error():
    doc = dict(BASE_DOC, marked_sets={"M": {"space": "nope", "marking": "flat"}})
    with pytest.raises(WorkspaceError):
        Workspace.parse(json.dumps(doc))


def test_reference_cycle_is_detected():
    doc = {"schema": 1,
           "simplicial_sets": {"a": {"product": ["a", "a"]}}}
    with pytest.raises(WorkspaceError):
        Workspace.parse(json.dumps(doc)).space("a")


def test_partial_map_components_fill_degenerates():
    doc = {"schema": 1, "dim_bound": 2,
           "simplicial_sets": {"pt": {"generator": "delta 0"},
                               "seg": {"generator": "delta 1"}},
           "maps": {"end": {"source": "pt", "target": "seg",
                            "components": {"0": {"(0)": "(1)"}}}}}
    ws = Workspace.parse(json.dumps(doc))
    f = ws.mapping("end")
    from grosimp.validate import map_violations
    assert not map_violations(f)
    assert f.apply(2, (0, 0, 0)) == (1, 1, 1)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def run(args, capsys):
    code = main(args)
    return code, capsys.readouterr().out


def test_nerve_of_terminal_category_is_a_point(ws_path, capsys):
    code, out = run(["nerve", ws_path, "--category", "T"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["report"]["sizes"] == [1, 1, 1, 1, 1]


def test_check_iso_on_a_constant_point_diagram(ws_path, capsys):
    code, out = run(["check-iso", ws_path, "--diagram", "F"], capsys)
    assert code == 0
    assert json.loads(out)["report"]["summary"] == "bijective, degrees 0..4"


def test_localize_flat_interval_has_five_edges(ws_path, capsys):
    code, out = run(["localize", ws_path, "--marked", "M"], capsys)
    assert code == 0
    assert json.loads(out)["report"]["sizes"][1] == 5


def test_reruns_are_byte_identical(ws_path, tmp_path):
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert main(["grothendieck", ws_path, "--diagram", "F", "--out", a]) == 0
    assert main(["grothendieck", ws_path, "--diagram", "F", "--out", b]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_outputs_parse_as_workspaces(ws_path, tmp_path):
    out = str(tmp_path / "rel.json")
    assert main(["relnerve", ws_path, "--diagram", "F", "--out", out]) == 0
    text = open(out).read()
    ws = Workspace.parse(text)
    assert ws.emit() == text
    # and feed the next command
    code = main(["check-fibration", out, "--map", "F_relnerve_projection",
                 "--nmax", "2", "--out", str(tmp_path / "fib.json")])
    assert code == 0


def test_validate_reports_defects(tmp_path, capsys):
    doc = {
        "schema": 1, "dim_bound": 1,
        "simplicial_sets": {"broken": {
            "dim_bound": 1,
            "simplices": {"0": ["0", "1"],
                          "1": ["(0,1)", "(0,0)", "(1,1)"]},
            "faces": {"1": {"(0,1)": ["1", "0"], "(0,0)": ["0", "1"],
                            "(1,1)": ["1", "1"]}},
            "degens": {"0": {"0": ["(0,0)"], "1": ["(1,1)"]}}}},
    }
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, out = run(["validate", str(path)], capsys)
    assert code == 1
    assert json.loads(out)["report"]["defects"]


def test_parse_errors_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{\"schema\": 2}")
    assert main(["validate", str(path)]) == 2
    path.write_text("not json at all")
    assert main(["validate", str(path)]) == 2
    assert main(["nerve", str(tmp_path / "missing.json"),
                 "--category", "T"]) == 2


def test_usage_error_on_unmarked_bar(ws_path):
    assert main(["bar", ws_path, "--diagram", "F"]) == 2


def test_budget_exhaustion_exits_three(ws_path, tmp_path):
    rel = str(tmp_path / "rel.json")
    assert main(["relnerve", ws_path, "--diagram", "F", "--out", rel]) == 0
    code = main(["check-fibration", rel, "--map", "F_relnerve_projection",
                 "--nmax", "3", "--budget", "5"])
    assert code == 3


def test_mark_then_localize_pipeline(ws_path, tmp_path, capsys):
    marked = str(tmp_path / "marked.json")
    assert main(["mark", ws_path, "--space", "seg", "--marking", "sharp",
                 "--out", marked]) == 0
    code, out = run(["localize", marked, "--marked", "seg_sharp"], capsys)
    assert code == 0
    doc = json.loads(out)
    # three edges inverted: 3 + 3*(4-3) at degree 1
    assert doc["report"]["inverted"] == 3
    assert doc["report"]["sizes"][1] == 6


def test_suite_smoke(capsys):
    code, out = run(["suite", "--count", "2"], capsys)
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert len(lines) == 12
    assert all(l.startswith("PASS") for l in lines)

import os

from src.core.cells import build_atlas, closed_form_assignment
from src.core.report_generator import (
    PENULTIMATE_COLUMNS,
    MarkdownSuiteReport,
    elements_frame,
    penultimate_frame,
    penultimate_graph_to_dot,
    poset_to_dot,
    to_csv,
    to_json,
)
from src.core.socle import SocleContext
from src.core.suites import CheckResult, SuiteResult
from src.utils.config import STATUS_FAIL, STATUS_PASS


def test_json_is_sorted():
    assert to_json({"b": 1, "a": "ℓ"}).splitlines()[1] == '  "a": "ℓ",'


def test_penultimate_csv(systems):
    atlas = build_atlas(systems["G2"])
    frame = penultimate_frame(closed_form_assignment(atlas))
    assert list(frame.columns) == PENULTIMATE_COLUMNS
    assert len(frame) == 10
    row = frame[frame["element"] == "21"].iloc[0]
    assert (row["s"], row["t"], row["polynomial"], row["value_at_one"]) == ("1", "2", "v^2", 1)
    assert to_csv(frame).splitlines()[0] == ",".join(PENULTIMATE_COLUMNS)


def test_elements_frame(systems):
    g2 = systems["G2"]
    frame = elements_frame([g2.identity, g2.w0], {g2.w0: {"top": True}})
    assert list(frame["element"]) == ["e", "121212"]
    assert frame["top"].iloc[1]


def test_poset_dot(socle_contexts):
    dot = poset_to_dot(socle_contexts["G2"].poset("1", "1"))
    assert "JI_1_1" in dot
    assert "12121" in dot
    assert "dashed" not in dot


def test_poset_dot_marks_bigrassmannians(systems):
    context = SocleContext(systems["D4"])
    dot = poset_to_dot(context.poset("1", "1", include_bg=True))
    assert "JI_1_1" in dot
    assert "box" in dot


def test_penultimate_graph_dot(systems):
    dot = penultimate_graph_to_dot(build_atlas(systems["B2"]))
    assert "J_B2" in dot


def test_markdown_report(tmp_path):
    result = SuiteResult("demo", [CheckResult("demo/a", STATUS_PASS, "x|y"), CheckResult("demo/b", STATUS_FAIL, "mal")])
    report = MarkdownSuiteReport(str(tmp_path / "informe.md"))
    content = report.generate_report(result)
    assert os.path.exists(report.output_path)
    assert report.output_path.startswith(str(tmp_path))
    assert "# Suite `demo`" in content
    assert "| `demo/a` | ✅ pass | x\\|y |" in content
    assert "**con fallos**" in content

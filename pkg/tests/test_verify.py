import json

from motiveforge.verify import SUITES, run


def test_suite_names():
    assert "all" in SUITES
    for name in ("lambda", "series", "macdonald", "moduli", "realizations",
                 "jacobians", "serialization"):
        assert name in SUITES


def test_macdonald_suite_passes():
    rep = run("macdonald", (1, 3), cases=50)
    assert not rep.failed
    assert {r.suite for r in rep.results} == {"macdonald"}


def test_report_schema_and_determinism():
    rep = run("jacobians", (2, 3), cases=10)
    blob = rep.to_json_dict()
    assert blob["schema"] == "verify-report/v1"
    assert set(blob["summary"]) == {"pass", "fail", "diagnostic"}
    again = run("jacobians", (2, 3), cases=10)
    assert json.dumps(blob) == json.dumps(again.to_json_dict())


def test_full_run_has_diagnostics_but_no_failures():
    rep = run("all", None, cases=25)
    counts = rep.counts()
    assert counts["fail"] == 0
    assert counts["diagnostic"] == 2  # truncation findings, closed-form comparators
    assert counts["pass"] >= 25


def test_genus_range_clips_checks():
    rep = run("realizations", (2, 2), cases=10)
    by_name = {r.name: r for r in rep.results}
    assert "genera [2]" in by_name["harder_narasimhan_reproduction"].details
    assert not rep.failed


def test_render_text_one_line_per_check():
    rep = run("serialization", None, cases=10)
    lines = rep.render_text().splitlines()
    assert len(lines) == len(rep.results) + 1  # plus the summary line
    assert lines[0].startswith("PASS")

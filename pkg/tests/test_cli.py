"""Front-end parsing, report building, and exit codes."""

import io
import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_descriptor
from susp5.cli import (
    ParseError,
    RunConfig,
    build_report,
    main,
    parse_descriptor_text,
    render_descriptor,
    run,
)
from susp5.reduction import AttachCase

MINIMAL = "l = 1\nd = 1\nspin = true\n"

FULL = """
# a lens-like example
l = 2
d = 1
H = Z/5
T = Z/2 + Z/4
spin = false
smooth = true
c2 = 1
consumed = [1]
case = tilde_eta(0)
"""

MATRIX = """
l = 2
d = 1
T = Z/2
spin = true
smooth = true

[h_matrix]
sphere = eta 0
moore r=1 = 0 i3eta
"""

PHI = """
l = 1
d = 1
spin = false
smooth = true

[h_matrix]
sphere = 0

[phi]
y = 1
"""


def test_parse_minimal():
    desc = parse_descriptor_text(MINIMAL)
    assert (desc.l, desc.d, desc.spin, desc.smooth, desc.pd_mode) == (
        1,
        1,
        True,
        True,
        False,
    )
    assert desc.case.kind == "null"


def test_parse_full():
    desc = parse_descriptor_text(FULL)
    assert desc.h1_torsion.render() == "Z/5"
    assert desc.consumed == (1,)
    assert desc.case == AttachCase("tilde_eta", 0, 1)


def test_pd_mode_defaults_smooth_off():
    desc = parse_descriptor_text("l = 1\nd = 1\nspin = true\npd_mode = true\n")
    assert not desc.smooth and desc.pd_mode


def test_parse_matrix_route():
    desc = parse_descriptor_text(MATRIX)
    assert (desc.c1, desc.c2, desc.consumed) == (1, 1, (0,))
    assert desc.case.kind == "null"


def test_parse_phi_route():
    desc = parse_descriptor_text(PHI)
    assert desc.case == AttachCase("eta")


def test_parse_phi_moore_slot():
    text = """
l = 1
d = 1
T = Z/4
spin = false
smooth = true

[h_matrix]
sphere = 0
moore r=2 = 0

[phi]
z = 1
"""
    desc = parse_descriptor_text(text)
    assert desc.case == AttachCase("tilde_eta", 0, 2)


def test_syntax_error_kind_line_and_source():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nd = 1\nspin = yes\n", source="f.txt")
    err = ei.value
    assert err.kind == "syntax"
    assert err.line == 3
    assert str(err).startswith("f.txt:3:")


def test_unknown_key_is_syntax_error():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nbogus = 3\nd = 1\nspin = true\n")
    assert ei.value.kind == "syntax" and ei.value.line == 2


def test_duplicate_key_is_consistency_error():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nl = 2\nd = 1\nspin = true\n")
    assert ei.value.kind == "consistency"


def test_negative_value_is_range_error():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = -3\nd = 1\nspin = true\n")
    assert ei.value.kind == "range" and ei.value.line == 1


def test_missing_required_key():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nspin = true\n")
    assert ei.value.kind == "consistency" and "d" in ei.value.message


def test_both_routes_rejected():
    text = MATRIX.replace("[h_matrix]", "c1 = 1\n\n[h_matrix]")
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text(text)
    assert ei.value.kind == "consistency" and "not both" in ei.value.message


def test_phi_without_matrix_rejected():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text(MINIMAL + "\n[phi]\ny = 1\n")
    assert ei.value.kind == "consistency"


def test_h_with_even_torsion_rejected():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nd = 1\nH = Z/6\nspin = true\n")
    assert ei.value.kind == "consistency"


def test_matrix_entry_errors():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text(MATRIX.replace("eta 0", "2 0"))
    assert ei.value.kind == "range"
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text(MATRIX.replace("eta 0", "zeta 0"))
    assert ei.value.kind == "syntax"


def test_descriptor_inconsistency_reported():
    with pytest.raises(ParseError) as ei:
        parse_descriptor_text("l = 1\nd = 1\nspin = true\nc1 = 2\n")
    assert ei.value.kind == "consistency"


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**9))
def test_render_parse_round_trip(seed):
    d0 = random_descriptor(random.Random(seed))
    assert parse_descriptor_text(render_descriptor(d0)) == d0


def test_build_report_contents():
    report = build_report(parse_descriptor_text(MINIMAL))
    assert report["single_suspension"] == "S^2 v S^3 v S^4 v S^5 v S^6"
    assert report["invariants"]["pi3"] == "Z + Z/2 + Z/2"
    assert report["invariants"]["k"] == "Z^2"
    assert set(report["checks"].values()) == {"ok"}


def test_run_human_output():
    buf, err = io.StringIO(), io.StringIO()
    code = run(
        RunConfig(),
        stdin=io.StringIO("l = 1\nd = 1\nH = Z/5\nspin = true\n"),
        stdout=buf,
        stderr=err,
    )
    assert code == 0, err.getvalue()
    out = buf.getvalue()
    assert "P^3(Z/5)" in out
    assert "implied by connectivity" in out
    assert "checks:" in out and "fail" not in out


def test_structured_output_is_byte_stable():
    payloads = []
    for _ in range(2):
        buf = io.StringIO()
        code = run(RunConfig(fmt="structured"), stdin=io.StringIO(FULL), stdout=buf)
        assert code == 0
        payloads.append(buf.getvalue())
    assert payloads[0] == payloads[1]
    report = json.loads(payloads[0])
    assert report["input"]["case"] == "tilde_eta(0)"
    assert report["checks"]["cohomotopy_crosscheck"] == "ok"


def test_inject_fault_exits_nonzero():
    buf = io.StringIO()
    code = run(RunConfig(inject_fault=True), stdin=io.StringIO(MINIMAL), stdout=buf)
    assert code == 1
    assert "fail (injected fault)" in buf.getvalue()


def test_parse_error_exit_and_stderr(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("l = x\nd = 1\nspin = true\n")
    err = io.StringIO()
    code = run(RunConfig(paths=(str(p),)), stdout=io.StringIO(), stderr=err)
    assert code == 2
    assert "syntax error" in err.getvalue()


def test_missing_file_exit(tmp_path):
    err = io.StringIO()
    code = run(
        RunConfig(paths=(str(tmp_path / "nope.txt"),)), stdout=io.StringIO(), stderr=err
    )
    assert code == 2


def test_three_torsion_single_vs_double_mode():
    text = "l = 1\nd = 1\nH = Z/3\nspin = true\n"
    err = io.StringIO()
    assert run(RunConfig(), stdin=io.StringIO(text), stdout=io.StringIO(), stderr=err) == 2
    assert "three-primary" in err.getvalue()

    buf = io.StringIO()
    assert (
        run(RunConfig(mode="double", fmt="structured"), stdin=io.StringIO(text), stdout=buf)
        == 0
    )
    report = json.loads(buf.getvalue())
    assert report["single_suspension"] is None
    assert "P^4(Z/3)" in report["double_suspension"]
    assert report["checks"]["cohomotopy_crosscheck"].startswith("skipped")


def test_check_none_skips_checks():
    buf = io.StringIO()
    code = run(
        RunConfig(fmt="structured", check="none", inject_fault=True),
        stdin=io.StringIO(MINIMAL),
        stdout=buf,
    )
    assert code == 0
    assert json.loads(buf.getvalue())["checks"] == {}


def test_out_file(tmp_path):
    src = tmp_path / "m.txt"
    src.write_text(MINIMAL)
    dst = tmp_path / "report.json"
    assert main([str(src), "--format", "structured", "--out", str(dst)]) == 0
    assert json.loads(dst.read_text())["mode"] == "single"


def test_batch_structured_is_one_line_per_input(tmp_path):
    a = tmp_path / "a.txt"
    a.write_text(MINIMAL)
    b = tmp_path / "b.txt"
    b.write_text(MATRIX)
    buf = io.StringIO()
    code = run(RunConfig(paths=(str(a), str(b)), fmt="structured"), stdout=buf)
    assert code == 0
    rows = [json.loads(line) for line in buf.getvalue().splitlines()]
    assert [r["source"] for r in rows] == [str(a), str(b)]


def test_module_entry_point(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text(MINIMAL)
    proc = subprocess.run(
        [sys.executable, "-m", "susp5", str(p)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert "S^2 v S^3 v S^4 v S^5 v S^6" in proc.stdout

import json

from annulet.cli import main as cli_main
from annulet.diagram import trefoil_left
from annulet.harness import Budgets, generate_family, render_svg, run_suite
from annulet.presentations import get_presentation, underlying_knot


def test_generate_family_counts():
    rows = generate_family("nine42", n_range=(-2, -1, 0, 1, 2), m_range=(),
                           budgets=Budgets(effort=40))
    assert len(rows) == 5
    assert all("path" in r and "crossings" in r for r in rows)
    rows = generate_family("toy-unknot", n_range=(), m_range=(-1, 0, 1),
                           budgets=Budgets(effort=40))
    assert len(rows) == 3
    assert all(r["diagram"].crossing_count() == 0 or True for r in rows)


def test_suite_reports_are_reproducible():
    a = run_suite("homology", "nine42", Budgets(seed=5))
    b = run_suite("homology", "nine42", Budgets(seed=5))
    ja, jb = json.loads(a.to_json()), json.loads(b.to_json())
    ja.pop("seconds"), jb.pop("seconds")
    for doc in (ja, jb):
        for c in doc["cases"]:
            c.pop("seconds")
    assert ja == jb
    assert ja["verdict"] == "pass"
    md = a.to_markdown()
    assert "homology" in md and "| case |" in md


def test_failing_suite_names_both_hypotheses():
    rep = run_suite("trace0", "nine42", Budgets(effort=40))
    failing = [c for c in rep.cases if c.verdict == "fail"]
    if failing:  # surfaced with the transcription-vs-code reading
        assert any("transcription" in c.detail for c in failing)


def test_render_deterministic():
    d = trefoil_left()
    svg1 = render_svg(d, seed=3)
    svg2 = render_svg(d, seed=3)
    assert svg1 == svg2
    assert svg1.startswith("<svg") and "</svg>" in svg1
    gated = underlying_knot(get_presentation("nine42"))
    svg = render_svg(gated)
    assert "dash" in svg  # gates drawn dashed
    assert "beta_plus" in svg


def test_cli_validate_and_invariant(tmp_path, capsys):
    assert cli_main(["validate", "--preset", "toy-unknot"]) == 0
    capsys.readouterr()
    assert cli_main(["invariant", "--preset", "nine42"]) == 0
    out = capsys.readouterr().out
    assert "jones" in out and "alexander" in out


def test_cli_verify_exit_codes(capsys):
    assert cli_main(["verify", "--suite", "homology", "--preset", "nine42"]) == 0
    capsys.readouterr()
    # trace0 currently fails: exit code 1 and the report names the hypotheses
    code = cli_main(["verify", "--suite", "trace0", "--preset", "nine42",
                     "--format", "json"])
    out = capsys.readouterr().out
    assert code in (0, 1)
    if code == 1:
        assert "transcription" in out


def test_cli_render_and_family(tmp_path, capsys):
    out_file = tmp_path / "d.svg"
    assert cli_main(["render", "--preset", "nine42", "--out", str(out_file)]) == 0
    assert out_file.read_text().startswith("<svg")
    assert cli_main(["family", "--preset", "toy-unknot", "--n-range=-1:1"]) == 0
    out = capsys.readouterr().out
    assert out.count("annulus_twist") == 3

import pytest

from toricarr.arrangement import parse
from toricarr.cli import main

FOUR_LINES = ("torus 2\nhyp 1 0 @ 0/1\nhyp 0 1 @ 0/1\n"
              "hyp 1 1 @ 0/1\nhyp 1 -1 @ 0/1\n")
FOUR_LINES_SHA = "45fe4bc0da077ce56f8eeb9cda3f05ce021b7f92a69047cc2ad2d0ced9b0bdfc"
TWO_CURVES = "torus 2\nhyp 1 0 @ 0/1\nhyp 1 3 @ 0/1\n"
TWO_CURVES_SHA = "26a6b0864f3af4730c8779a5ec1fea6b7621ed7312536c0eb467c08fe5144bf7"


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    (tmp_path / "four_lines.txt").write_text(FOUR_LINES)
    (tmp_path / "two_curves.txt").write_text(TWO_CURVES)
    (tmp_path / "empty3.txt").write_text("torus 3\n")
    (tmp_path / "bad.txt").write_text("torus 2\nhyp 2 4 @ 0/1\n")
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_golden(workdir, capsys):
    code, out, _ = run(capsys, "analyze", "four_lines.txt")
    assert code == 0
    assert out == (
        "command: analyze\n"
        "input: four_lines.txt\n"
        f"sha256: {FOUR_LINES_SHA}\n"
        "l: 2\n"
        "n: 4\n"
        "unimodular: false\n"
        "dr_type: true\n"
        "dr_ordering: 1,2,3,4\n"
        "poincare_dcp: 1 6 9\n"
        "poincare_dr: 1 6 9\n"
        "poset_layers: 1 4 2\n"
    )


def test_analyze_not_dr(workdir, capsys):
    code, out, _ = run(capsys, "analyze", "two_curves.txt")
    assert code == 0
    assert "dr_type: false\n" in out
    assert "dr_ordering: none\n" in out
    assert "poincare_dr: unavailable\n" in out
    # torus + two curves + three points, each on both curves:
    # (1+t)^2 + 2t(1+t) + 3t^2
    assert "poincare_dcp: 1 4 6\n" in out


def test_analyze_empty_torus(workdir, capsys):
    code, out, _ = run(capsys, "analyze", "empty3.txt")
    assert code == 0
    assert "poincare_dcp: 1 3 3 1\n" in out
    assert "poset_layers: 1\n" in out


def test_poset_golden(workdir, capsys):
    code, out, _ = run(capsys, "poset", "four_lines.txt")
    assert code == 0
    assert out == (
        "command: poset\n"
        "input: four_lines.txt\n"
        f"sha256: {FOUR_LINES_SHA}\n"
        "l: 2\n"
        "n: 4\n"
        "components: 7\n"
        "layer_sizes: 1 4 2\n"
        "component 1: codim=0 dim=2 basis=[] values=[]\n"
        "component 2: codim=1 dim=1 basis=[0 1] values=[0/1]\n"
        "component 3: codim=1 dim=1 basis=[1 -1] values=[0/1]\n"
        "component 4: codim=1 dim=1 basis=[1 0] values=[0/1]\n"
        "component 5: codim=1 dim=1 basis=[1 1] values=[0/1]\n"
        "component 6: codim=2 dim=0 basis=[1 0; 0 1] values=[0/1 0/1]\n"
        "component 7: codim=2 dim=0 basis=[1 0; 0 1] values=[1/2 1/2]\n"
        "cover: 2 < 1\n"
        "cover: 3 < 1\n"
        "cover: 4 < 1\n"
        "cover: 5 < 1\n"
        "cover: 6 < 2\n"
        "cover: 6 < 3\n"
        "cover: 6 < 4\n"
        "cover: 6 < 5\n"
        "cover: 7 < 3\n"
        "cover: 7 < 5\n"
    )


def test_poset_two_curves_counts(workdir, capsys):
    code, out, _ = run(capsys, "poset", "two_curves.txt")
    assert code == 0
    assert "components: 6\n" in out
    assert "layer_sizes: 1 2 3\n" in out


def test_poincare_dcp_golden(workdir, capsys):
    code, out, _ = run(capsys, "poincare", "--method=dcp", "four_lines.txt")
    assert code == 0
    assert out.endswith("method: dcp\npoincare: 1 6 9\n")


def test_poincare_dr_with_explicit_ordering(workdir, capsys):
    code, out, _ = run(capsys, "poincare", "--method=dr", "--ordering=2,1,3,4",
                       "four_lines.txt")
    assert code == 0
    assert "ordering: 2,1,3,4\n" in out
    assert "poincare: 1 6 9\n" in out


def test_poincare_dr_refusal_exit_2(workdir, capsys):
    code, out, err = run(capsys, "poincare", "--method=dr", "two_curves.txt")
    assert code == 2
    assert "refused" in err


def test_poincare_dr_bad_ordering_refused(workdir, capsys):
    # the reversed ordering starts with the two hypersurfaces meeting twice
    code, _, err = run(capsys, "poincare", "--method=dr", "--ordering=4,3,2,1",
                       "four_lines.txt")
    assert code == 2
    assert "refused" in err


def test_unimodular_golden(workdir, capsys):
    code, out, _ = run(capsys, "unimodular", "four_lines.txt")
    assert code == 0
    assert out == (
        "command: unimodular\n"
        "input: four_lines.txt\n"
        f"sha256: {FOUR_LINES_SHA}\n"
        "unimodular: false\n"
    )


def test_drtype_golden(workdir, capsys):
    code, out, _ = run(capsys, "drtype", "two_curves.txt")
    assert code == 0
    assert out == (
        "command: drtype\n"
        "input: two_curves.txt\n"
        f"sha256: {TWO_CURVES_SHA}\n"
        "dr_type: false\n"
        "dr_ordering: none\n"
        "step_counts: none\n"
    )
    code, out, _ = run(capsys, "drtype", "four_lines.txt")
    assert code == 0
    assert "dr_ordering: 1,2,3,4\n" in out
    assert "step_counts: 1 1 2\n" in out


def test_weyl_golden(workdir, capsys):
    code, out, _ = run(capsys, "weyl", "--family=B", "--rank=2")
    assert code == 0
    assert out == ("torus 2\n"
                   "hyp 1 0 @ 0/1\n"
                   "hyp 0 1 @ 0/1\n"
                   "hyp 1 1 @ 0/1\n"
                   "hyp 1 2 @ 0/1\n")
    arr = parse(out)
    assert arr.n == 4


def test_weyl_simple_only(workdir, capsys):
    code, out, _ = run(capsys, "weyl", "--family=G2", "--rank=2", "--simple-only")
    assert code == 0
    assert out == "torus 2\nhyp 1 0 @ 0/1\nhyp 0 1 @ 0/1\n"


def test_weyl_invalid_rank_exit_1(workdir, capsys):
    code, _, err = run(capsys, "weyl", "--family=D", "--rank=2")
    assert code == 1
    assert "rank" in err


def test_relations_golden(workdir, capsys):
    code, out, _ = run(capsys, "relations", "--seed=0", "four_lines.txt")
    assert code == 0
    assert out == (
        "command: relations\n"
        "input: four_lines.txt\n"
        f"sha256: {FOUR_LINES_SHA}\n"
        "samples: 60\n"
        "tol: 1e-08\n"
        "seed: 0\n"
        "generators: xi1 xi2 psi1 psi2 psi3 psi4\n"
        "monomials: 15\n"
        "monomial_order: xi1^xi2 xi1^psi1 xi1^psi2 xi1^psi3 xi1^psi4 "
        "xi2^psi1 xi2^psi2 xi2^psi3 xi2^psi4 psi1^psi2 psi1^psi3 psi1^psi4 "
        "psi2^psi3 psi2^psi4 psi3^psi4\n"
        "nullity: 6\n"
        "expected_h2: 9\n"
        "consistent: true\n"
    )


def test_relations_empty(workdir, capsys):
    (workdir / "empty2.txt").write_text("torus 2\n")
    code, out, _ = run(capsys, "relations", "empty2.txt")
    assert code == 0
    assert "nullity: 0\n" in out
    assert "consistent: true\n" in out


def test_parse_error_exit_1(workdir, capsys):
    code, _, err = run(capsys, "analyze", "bad.txt")
    assert code == 1
    assert "line 2" in err and "nonprimitive" in err


def test_missing_file_exit_1(workdir, capsys):
    code, _, err = run(capsys, "analyze", "nope.txt")
    assert code == 1


def test_unknown_command_exit_1(workdir, capsys):
    code, _, err = run(capsys, "frobnicate", "x")
    assert code == 1


def test_reports_are_deterministic(workdir, capsys):
    a = run(capsys, "relations", "--seed=5", "four_lines.txt")
    b = run(capsys, "relations", "--seed=5", "four_lines.txt")
    assert a == b


def test_analyze_methods_agree_on_dr_fixtures(workdir, capsys):
    from toricarr.arrangement import braid, serialize, weyl
    (workdir / "braid3.txt").write_text(serialize(braid(3)))
    (workdir / "b2.txt").write_text(serialize(weyl("B", 2)))
    for name in ("four_lines.txt", "braid3.txt", "b2.txt"):
        code, out, _ = run(capsys, "analyze", name)
        assert code == 0
        lines = dict(l.split(": ", 1) for l in out.splitlines() if ": " in l)
        assert lines["dr_type"] == "true"
        assert lines["poincare_dcp"] == lines["poincare_dr"]

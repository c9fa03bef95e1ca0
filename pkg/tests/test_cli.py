"""End-to-end command-line tests against golden transcripts.

Every transcript is produced with --seed 0 (the default), so reruns are
byte-identical.  Regenerate with ``pytest tests/test_cli.py --regen-golden``
after an intentional output change.
"""

import io
import json
import pathlib

import pytest

from homkit.cli import run

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIX = "fixtures"


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


CASES = [
    # (golden name, argv, expected exit code)
    ("check_aff2.txt", ["check", f"{FIX}/aff2_lambda2.json"], 0),
    ("check_aff2.json", ["check", f"{FIX}/aff2_lambda2.json", "--format", "json"], 0),
    ("check_broken_heis3.txt", ["check", f"{FIX}/broken_heis3.json"], 1),
    ("check_sl2.txt", ["check", f"{FIX}/sl2.json"], 0),
    ("dgca_verify_heis3.txt", ["dgca", "verify", f"{FIX}/heis3.json"], 0),
    ("dgca_verify_broken.txt", ["dgca", "verify", f"{FIX}/broken_heis3.json"], 1),
    ("dgca_roundtrip_sl2.txt", ["dgca", "roundtrip", f"{FIX}/sl2.json"], 0),
    ("dgca_roundtrip_aff2.txt", ["dgca", "roundtrip", f"{FIX}/aff2_lambda2.json"], 0),
    ("rep_check_adjoint.txt", ["rep", "check", f"{FIX}/rep_aff2_adjoint.json"], 0),
    ("rep_check_failing.txt", ["rep", "check", f"{FIX}/rep_failing.json"], 1),
    ("cohomology_trivial_k1.txt",
     ["cohomology", f"{FIX}/rep_trivial_aff2.json", "--s", "0", "--k", "1"], 0),
    ("cohomology_trivial_k2.json",
     ["cohomology", f"{FIX}/rep_trivial_aff2.json", "--s", "1", "--k", "2",
      "--format", "json"], 0),
    ("omni_check_m2.txt",
     ["omni", "check", f"{FIX}/omni_m2.json", "--q", "1", "--trials", "25"], 0),
    ("omni_check_m2_q0.json",
     ["omni", "check", f"{FIX}/omni_m2.json", "--trials", "10",
      "--format", "json"], 0),
    ("omni_dirac_graph.txt", ["omni", "dirac", f"{FIX}/subspace_graph_aff2.json"], 0),
    ("omni_dirac_module.txt", ["omni", "dirac", f"{FIX}/subspace_v_m2.json"], 0),
    ("omni_dirac_nonisotropic.txt",
     ["omni", "dirac", f"{FIX}/subspace_nonisotropic.json"], 1),
    ("omni_graph_aff2.json",
     ["omni", "graph", f"{FIX}/bilinear_aff2.json", "--beta", "[[1,0],[0,2]]"], 0),
    ("omni_thm1_aff2.txt",
     ["omni", "thm1", f"{FIX}/bilinear_aff2.json", "--beta", "[[1,0],[0,2]]"], 0),
    ("omni_thm1_nonskew.txt", ["omni", "thm1", f"{FIX}/bilinear_nonskew.json"], 0),
    ("omni_thm1_broken.txt",
     ["omni", "thm1", f"{FIX}/bilinear_broken_jacobi.json"], 0),
    ("homlie2_check_m1.txt", ["homlie2", "check", f"{FIX}/homlie2_m1.json"], 0),
    ("homlie2_check_m2.txt", ["homlie2", "check", f"{FIX}/homlie2_m2.json"], 0),
    ("homlie2_from_omni_m1.json",
     ["homlie2", "from-omni", "--dim", "1", "--beta", "[[2]]"], 0),
    ("catalog_list.txt", ["catalog", "list"], 0),
    ("catalog_emit_heis3.json", ["catalog", "emit", "heis3"], 0),
]


@pytest.mark.parametrize("name,argv,expected", CASES, ids=[c[0] for c in CASES])
def test_cli_golden(golden, monkeypatch, name, argv, expected):
    monkeypatch.chdir(ROOT)
    code, out, err = invoke(argv)
    assert code == expected, err
    golden(name, out)


def test_golden_outputs_are_deterministic(monkeypatch):
    monkeypatch.chdir(ROOT)
    argv = ["omni", "check", f"{FIX}/omni_m2.json", "--trials", "25"]
    assert invoke(argv) == invoke(argv)


def test_from_omni_output_feeds_back_into_check(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    out_file = tmp_path / "generated.json"
    code, _, _ = invoke(["homlie2", "from-omni", "--dim", "2",
                         "--beta", "[[1,1],[0,1]]", "--out", str(out_file)])
    assert code == 0
    code, out, _ = invoke(["homlie2", "check", str(out_file)])
    assert code == 0
    assert "overall: PASS" in out


def test_graph_output_feeds_back_into_dirac(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    out_file = tmp_path / "graph.json"
    code, _, _ = invoke(["omni", "graph", f"{FIX}/bilinear_aff2.json",
                         "--beta", "[[1,0],[0,2]]", "--out", str(out_file)])
    assert code == 0
    code, out, _ = invoke(["omni", "dirac", str(out_file)])
    assert code == 0
    assert "overall: PASS" in out


def test_catalog_emit_feeds_back_into_check(tmp_path, monkeypatch):
    monkeypatch.chdir(ROOT)
    for name in ("aff2_2", "heis3_twisted", "sl2", "abelian4"):
        out_file = tmp_path / f"{name}.json"
        assert invoke(["catalog", "emit", name, "--out", str(out_file)])[0] == 0
        code, out, _ = invoke(["check", str(out_file)])
        assert code == 0 and "overall: PASS" in out


class TestExitCodeContract:
    def test_missing_file_is_input_error(self, monkeypatch):
        monkeypatch.chdir(ROOT)
        code, _, err = invoke(["check", "fixtures/does_not_exist.json"])
        assert code == 2 and "error:" in err

    def test_invalid_json_is_input_error(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{ nope")
        code, _, err = invoke(["check", str(bad)])
        assert code == 2 and "line 1" in err

    def test_skew_violation_is_input_error(self, tmp_path):
        doc = {"dim": 2, "bracket": [[1, 2, [2, "1"]], [2, 1, [2, "1"]]],
               "alpha": [["1", "0"], ["0", "1"]]}
        bad = tmp_path / "nonskew.json"
        bad.write_text(json.dumps(doc))
        code, _, err = invoke(["check", str(bad)])
        assert code == 2 and "skewsymmetric" in err

    def test_singular_beta_is_input_error(self, monkeypatch):
        monkeypatch.chdir(ROOT)
        code, _, err = invoke(["omni", "graph", f"{FIX}/bilinear_aff2.json",
                               "--beta", "[[1,1],[1,1]]"])
        assert code == 1 or code == 2  # singular matrix is rejected
        assert "rank" in err

    def test_unknown_catalog_name(self):
        code, _, err = invoke(["catalog", "emit", "nonexistent"])
        assert code == 2 and "unknown catalog name" in err

    def test_missing_beta_for_graph(self, monkeypatch):
        monkeypatch.chdir(ROOT)
        code, _, err = invoke(["omni", "graph", f"{FIX}/bilinear_aff2.json"])
        assert code == 2 and "twist" in err

    def test_usage_error(self):
        assert invoke(["omni"])[0] == 2
        assert invoke(["nonsense"])[0] == 2

"""Тесты CLI: команды, коды выхода, форматы вывода, лог сессии"""

import json
from pathlib import Path

import pytest

from main import main
from src.cfk import catalog_names


def run_json(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


# ============================================================
# Пакетные команды
# ============================================================

class TestBatchCommands:

    def test_profile_trefoil(self, capsys):
        code, data = run_json(capsys, "profile", "catalog:trefoil_right")
        assert code == 0
        assert data["command"] == "profile"
        assert data["exit_code"] == 0
        report = data["reports"][0]
        assert report["status"] == "ok"
        assert report["profile"]["d_untwisted_plus"] == "-3/2"
        assert report["profile"]["dtilde_twisted_minus"] == "2"
        assert report["d_symmetric"] is False
        assert all(c["status"] == "pass" for c in report["checks"])
        assert "error" not in report

    def test_profile_broken_file(self, capsys, data_dir):
        code, data = run_json(capsys, "profile", str(data_dir / "broken.cfk"), "catalog:unknot")
        assert code == 2
        broken, unknot = data["reports"]
        assert broken["status"] == "error"
        assert broken["error_kind"] == "CfkValidationError"
        assert "d_squared" in {v["kind"] for v in broken["validation"]["violations"]}
        assert unknot["status"] == "ok"
        assert data["summary"] == {"ok": 1, "check_failed": 0, "error": 1, "inputs": 2}

    def test_validate(self, capsys, data_dir):
        code, data = run_json(capsys, "validate", str(data_dir / "trefoil_right.cfk"), str(data_dir / "trefoil_one_arrow.cfk"))
        assert code == 2
        good, one_arrow = data["reports"]
        assert good["validation"]["valid"] is True
        assert good["validation"]["homology_rank"] == 1
        assert [v["kind"] for v in one_arrow["validation"]["violations"]] == ["flip_law"]

    def test_v0_keeps_input_order(self, capsys):
        code, data = run_json(capsys, "v0", "catalog:trefoil_left", "catalog:trefoil_right", "catalog:unknot")
        assert code == 0
        assert [(r["name"], r["v0"], r["v0_mirror"]) for r in data["reports"]] == [
            ("trefoil_left", 0, 1),
            ("trefoil_right", 1, 0),
            ("unknot", 0, 0),
        ]
        assert data["reports"][0]["certificates"][0]["op"] == "compute_V"

    def test_cone_d(self, capsys):
        code, data = run_json(capsys, "cone-d", "catalog:trefoil_right")
        assert code == 0
        report = data["reports"][0]
        assert report["d_twisted"] == "-1/2"
        assert report["untwisted_bottoms"] == ["-3/2", "-1/2"]

    def test_twisted_d_builtin(self, capsys):
        code, data = run_json(capsys, "twisted-d", "builtin:not_equal")
        assert code == 0
        assert data["reports"][0]["d"] == "-1/2"

    def test_unknown_catalog_name(self, capsys):
        code, data = run_json(capsys, "v0", "catalog:nothing")
        assert code == 2
        assert data["reports"][0]["error_kind"] == "UsageError"

    def test_stability_rounds_below_two(self, capsys):
        code = main(["v0", "catalog:unknot", "--stability-rounds", "1"])
        assert code == 2
        assert "stability_rounds" in capsys.readouterr().err

    def test_truncation_below_floor(self, capsys):
        code, data = run_json(capsys, "v0", "catalog:trefoil_right", "--truncation", "2")
        assert code == 2
        assert data["reports"][0]["error_kind"] == "TruncationError"

    def test_output_is_byte_deterministic(self, capsys):
        argv = ["profile", "catalog:figure8", "catalog:trefoil_right"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first


# ============================================================
# check-all
# ============================================================

class TestCheckAll:

    def test_builtin_catalog_passes(self, capsys):
        code, data = run_json(capsys, "check-all")
        assert code == 0
        inputs = [r["input"] for r in data["reports"]]
        assert "catalog:whitehead_double_trefoil_model" in inputs
        assert inputs[-1] == "builtin:not_equal"

    def test_corpus_with_broken_file(self, capsys, tmp_path, data_dir):
        corpus = tmp_path / "corpus"
        corpus.mkdir()
        for name in ("broken.cfk", "trefoil_right.cfk"):
            (corpus / name).write_text((data_dir / name).read_text(encoding="utf-8"), encoding="utf-8")
        code, data = run_json(capsys, "check-all", "--catalog-dir", str(corpus))
        assert code == 2
        by_input = {Path(r["input"]).name: r for r in data["reports"]}
        assert by_input["broken.cfk"]["status"] == "error"
        assert by_input["trefoil_right.cfk"]["status"] == "ok"

    def test_catalog_dir_from_environment(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("CFKLAB_CATALOG_DIR", str(tmp_path / "missing"))
        assert main(["check-all"]) == 2
        assert "UsageError" in capsys.readouterr().err


# ============================================================
# two-knot
# ============================================================

class TestTwoKnot:

    def test_qhs(self, capsys):
        code, data = run_json(capsys, "two-knot", "--qhs-d", "2")
        assert code == 0
        assert data["two_knot"] == {"d_sigma": "2", "d_sigma_r": "-2", "d_sigma_bar": "2", "d_sigma_bar_r": "-2"}
        obstructions = data["obstructions"]
        assert obstructions["reversible"] == {"obstructed": True, "identity": "d(Σ) = d(Σ^r)", "values": ["2", "-2"]}
        assert obstructions["positive_amphichiral"] == {"obstructed": False}
        assert obstructions["d_symmetric_seifert"]["obstructed"] is False

    def test_zero_quadruple(self, capsys):
        code, data = run_json(capsys, "two-knot", "--quadruple", "0", "0", "0", "0")
        assert code == 0
        assert not any(flag["obstructed"] for flag in data["obstructions"].values())

    def test_quadruple_obstructs_d_symmetric(self, capsys):
        code, data = run_json(capsys, "two-knot", "--quadruple", "0", "-2", "0", "-2")
        assert code == 0
        assert data["obstructions"]["d_symmetric_seifert"]["obstructed"] is True

    def test_fibered(self, capsys):
        code, data = run_json(
            capsys, "two-knot", "--fiber-d-plus=-1/2", "--fiber-d-minus=-1/2", "--b1", "1"
        )
        assert code == 0
        assert set(data["two_knot"].values()) == {"0"}

    def test_reference(self, capsys):
        code, data = run_json(capsys, "two-knot", "--reference", "six_twist_spin_trefoil")
        assert code == 0
        assert data["two_knot"]["d_sigma_r"] == "-2"
        assert data["obstructions"]["qhs_seifert"]["obstructed"] is True

    def test_surgery_fiber(self, capsys):
        code, data = run_json(capsys, "two-knot", "--surgery-fiber", "catalog:trefoil_left")
        assert code == 0
        assert data["two_knot"]["d_sigma"] == "2"
        assert data["obstructions"]["negative_amphichiral"]["obstructed"] is True

    @pytest.mark.parametrize(
        "argv",
        [
            ["two-knot"],
            ["two-knot", "--qhs-d", "2", "--quadruple", "0", "0", "0", "0"],
            ["two-knot", "--qhs-d", "1"],
            ["two-knot", "--fiber-d-plus=1/2", "--fiber-d-minus=1/2", "--b1", "1"],
            ["two-knot", "--qhs-d", "1/0"],
            ["two-knot", "--quadruple", "1", "0", "0", "0"],
            ["two-knot", "--fiber-d-plus", "0", "--b1", "0"],
            ["two-knot", "--reference", "poincare_sphere"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[CLI]" in captured.err

    def test_table_format(self, capsys):
        assert main(["two-knot", "--qhs-d", "2", "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert "2-knot invariants" in out
        assert "obstructed" in out


# ============================================================
# catalog, вывод, логи
# ============================================================

class TestCatalogAndOutput:

    def test_catalog_list(self, capsys):
        code, data = run_json(capsys, "catalog", "list")
        assert code == 0
        assert "trefoil_right" in data["names"]
        assert data["names"] == catalog_names()

    def test_catalog_show(self, capsys):
        code, data = run_json(capsys, "catalog", "show", "trefoil_right")
        assert code == 0
        assert data["name"] == "trefoil_right"
        assert [g["id"] for g in data["generators"]] == ["a", "b", "c"]

    def test_catalog_show_needs_name(self, capsys):
        assert main(["catalog", "show"]) == 2

    def test_batch_table(self, capsys):
        assert main(["v0", "catalog:trefoil_right", "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert "trefoil_right" in out
        assert "V0=1" in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        assert main(["v0", "catalog:unknot", "--out", str(target)]) == 0
        assert capsys.readouterr().out == ""
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["reports"][0]["v0"] == 0

    def test_session_log(self, capsys, tmp_path, data_dir):
        code = main(["validate", "catalog:unknot", str(data_dir / "broken.cfk"), "--log-session", "t1"])
        assert code == 2
        log = json.loads((tmp_path / "logs" / "cfklab_session_t1.json").read_text(encoding="utf-8"))
        assert log["tag"] == "t1"
        assert log["command"] == "validate"
        assert log["summary"]["exit_code"] == 2
        assert len(log["entries"]) == 2
        assert sum("error" in entry for entry in log["entries"]) == 1

    def test_debug_goes_to_stderr(self, capsys):
        code, data = run_json(capsys, "v0", "catalog:unknot", "--debug")
        assert code == 0
        assert data["reports"][0]["v0"] == 0

    def test_bad_command(self, capsys):
        assert main(["nonsense"]) == 2

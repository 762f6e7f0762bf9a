import json
import shutil

import pytest

from askey_contiguity import catalog, cli

QR_EXAMPLE = ["verify", "--family", "qR", "--relation", "qRI", "--q", "2/5", "--alpha", "1/3", "--beta", "1/7",
              "--gamma", "1/11", "--N", "3"]


def run(args, tmp_path, name="report.json"):
    out = tmp_path / name
    code = cli.main([*args, "-o", str(out)])
    return code, json.loads(out.read_text(encoding="utf-8"))


def test_parse_range():
    assert cli.parse_range("2..5") == [2, 3, 4, 5]
    assert cli.parse_range("4") == [4]
    with pytest.raises(cli.ConfigError):
        cli.parse_range("5..2")


def test_verify_example(tmp_path):
    code, report = run(QR_EXAMPLE, tmp_path)
    assert code == 0
    assert set(report) == {"version", "config_echo", "results", "summary"}
    assert report["summary"] == {"pass": 1, "fail": 0, "skipped": 0}
    assert {r["relation_id"] for r in report["results"]} == {"qRI"}
    assert report["config_echo"]["command"] == "verify"


def test_result_schema(tmp_path):
    _, report = run(QR_EXAMPLE, tmp_path)
    for result in report["results"]:
        assert {"relation_id", "params", "pass", "status", "checked", "residual_locus"} <= set(result)
        assert result["pass"] is True and result["residual_locus"] == []


def test_verify_shift_json(tmp_path):
    shift = json.dumps(catalog.get_entry("KI").shift)
    code, report = run(["verify", "--family", "K", "--shift", shift, "--N", "3", "--alpha", "1/3"], tmp_path)
    assert code == 0 and report["summary"]["fail"] == 0


def test_list(tmp_path, capsys):
    code, report = run(["list", "--family", "qR", "--kind", "B2"], tmp_path)
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    ids = [e.id for e in catalog.list_relations("qR", "B2")]
    assert all(any(line.startswith(rid) for line in lines) for rid in ids)
    assert len(ids) == 12


def test_sweep_full_catalog(tmp_path):
    code, report = run(["sweep", "--all", "--N", "2..5", "--samples", "3", "--seed", "7", "--quiet"], tmp_path)
    assert code == 0
    assert report["summary"]["fail"] == 0 and report["summary"]["pass"] > 0
    seen = {r["relation_id"] for r in report["results"] if r["status"] == "pass"}
    for tag in catalog.families():
        for entry in catalog.list_relations(tag):
            assert entry.id in seen


def test_sweep_deterministic(tmp_path):
    args = ["sweep", "--family", "K", "--N", "2..3", "--samples", "2", "--seed", "7", "--quiet"]
    _, first = run(args, tmp_path, "a.json")
    _, second = run(args, tmp_path, "b.json")
    assert first == second


def test_printed_formulas_fail(tmp_path):
    code, report = run(["sweep", "--relation", "qRI/III'", "--N", "4..5", "--printed", "--quiet"], tmp_path)
    assert code == 1 and report["summary"]["fail"] > 0


def test_chi_check_fails(tmp_path):
    code, _ = run(["spectral", "--relation", "qRI", "--N", "3", "--chi"], tmp_path)
    assert code == 1


def test_spectral_passes(tmp_path):
    code, report = run(["spectral", "--N", "2..3", "--samples", "1"], tmp_path)
    assert code == 0 and report["summary"]["fail"] == 0


def test_classify(tmp_path):
    code, report = run(["classify", "--family", "K", "--family", "qH"], tmp_path)
    assert code == 0 and report["summary"]["fail"] == 0


@pytest.mark.parametrize("args", [
    ["verify", "--relation", "nope"],
    ["verify", "--family", "qR", "--relation", "qRI", "--q", "abc"],
    ["sweep", "--family", "K", "--N", "x..y"],
    ["sweep"],
])
def test_config_errors(args, tmp_path):
    out = tmp_path / "err.json"
    assert cli.main([*args, "-o", str(out)]) == 2
    assert out.exists()


def test_unknown_command(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(["frobnicate"]) == 2


def test_exit_status_is_function_of_summary():
    assert cli.exit_status({"pass": 3, "fail": 0, "skipped": 2}) == 0
    assert cli.exit_status({"pass": 3, "fail": 1, "skipped": 0}) == 1


def test_report_round_trip(tmp_path):
    source = tmp_path / "source.json"
    assert cli.main([*QR_EXAMPLE, "-o", str(source)]) == 0
    assert cli.main(["report", str(source), "-o", str(tmp_path / "echo.json")]) == 0


def test_report_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert cli.main(["report", str(bad), "-o", str(tmp_path / "echo.json")]) == 2


def test_catalog_dir_override(tmp_path, monkeypatch):
    shutil.copy(catalog.DATA_DIR / "K.json", tmp_path / "K.json")
    monkeypatch.setenv("ASKEY_CATALOG_DIR", str(tmp_path))
    code, report = run(["sweep", "--all", "--N", "2..3", "--samples", "1", "--quiet"], tmp_path, "out.json")
    assert code == 0
    assert {r["relation_id"] for r in report["results"]} <= {"KI", "KII", "identity"}

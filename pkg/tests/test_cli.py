import json
import subprocess
import sys

from starcut.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_info_text(capsys):
    code, out = run_cli(capsys, "info", "4")
    assert code == 0
    assert "vertices: 24" in out and "edges:    36" in out
    assert "min 2-super cut size: 6" in out


def test_info_json_notes_small_isomorphisms(capsys):
    code, out = run_cli(capsys, "info", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["isomorphic_to"] == "C6"
    assert data["schema_version"] == 1
    assert data["min_cut_sizes"] == [{"k": 0, "cut_size": 2}, {"k": 1, "cut_size": 2}]


def test_export_dot_n2(capsys):
    code, out = run_cli(capsys, "export", "2", "--format", "dot")
    assert code == 0
    assert '"1,2" -- "2,1";' in out


def test_export_jsonl_sorted(capsys):
    code, out = run_cli(capsys, "export", "3", "--format", "jsonl")
    lines = out.strip().splitlines()
    assert code == 0
    assert len(lines) == 6
    parsed = [json.loads(line) for line in lines]
    assert parsed == sorted(parsed, key=lambda e: (e["u"], e["v"]))
    assert all(set(e) == {"u", "v"} for e in parsed)


def test_export_capacity_error(capsys):
    code = main(["export", "13"])
    assert code == 2


def test_decompose_dimension(capsys):
    code, out = run_cli(capsys, "decompose", "4", "--by", "dimension:4",
                        "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["part_sizes"] == {"1": 6, "2": 6, "3": 6, "4": 6}
    assert all(entry["edges"] == 2 for entry in data["pair_cross_edges"])


def test_decompose_symbol(capsys):
    code, out = run_cli(capsys, "decompose", "4", "--by", "symbol:1",
                        "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert data["center_size"] == 6 and data["center_edges"] == 0
    assert [m["edges"] for m in data["matchings"]] == [6, 6, 6]
    assert data["edges_between_parts"] == 0


def test_decompose_bad_by(capsys):
    assert main(["decompose", "4", "--by", "column:2"]) == 2
    assert main(["decompose", "4", "--by", "dimension:1"]) == 2


def test_cut_and_verify_round_trip(tmp_path, capsys):
    out_file = tmp_path / "cut.json"
    code = main(["cut", "4", "1", "-o", str(out_file)])
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["sizes"] == {"x": 2, "vertices": 4, "edges": 4}
    assert sorted(data["x"]) == ["3,4,1,2", "4,3,1,2"]

    code, out = run_cli(capsys, "verify-cut", "--vertices", str(out_file))
    verdict = json.loads(out)
    assert code == 0 and verdict["valid"] and verdict["mode"] == "vertex"
    assert sorted(verdict["component_sizes"]) == [2, 18]

    code, out = run_cli(capsys, "verify-cut", "--edges", str(out_file))
    verdict = json.loads(out)
    assert code == 0 and verdict["valid"] and verdict["mode"] == "edge"


def test_cut_compact_labels(capsys):
    code, out = run_cli(capsys, "cut", "4", "2", "--compact")
    data = json.loads(out)
    assert code == 0
    assert all(len(v) == 4 and "," not in v for v in data["vertices"])


def test_verify_cut_rejects_and_overrides(tmp_path, capsys):
    bad = tmp_path / "single.json"
    bad.write_text(json.dumps({"n": 4, "k": 0, "vertices": ["1,2,3,4"]}))
    code, out = run_cli(capsys, "verify-cut", "--vertices", str(bad))
    verdict = json.loads(out)
    assert code == 1
    assert verdict["reason"] == "not-disconnected"

    no_nk = tmp_path / "plain.json"
    no_nk.write_text(json.dumps({"vertices": ["1,2,3,4"]}))
    assert main(["verify-cut", "--vertices", str(no_nk)]) == 2
    code, out = run_cli(
        capsys, "verify-cut", "--vertices", str(no_nk), "--n", "4", "--k", "0"
    )
    assert code == 1  # valid override, still not a cut


def test_verify_cut_missing_file():
    assert main(["verify-cut", "--vertices", "/nonexistent/cut.json"]) == 2


def test_verify_cut_rejects_length_mismatch(tmp_path):
    short = tmp_path / "short.json"
    short.write_text(json.dumps({"n": 4, "k": 0, "vertices": ["1,2,3"]}))
    assert main(["verify-cut", "--vertices", str(short)]) == 2
    bad_edge = tmp_path / "edge.json"
    bad_edge.write_text(
        json.dumps({"n": 4, "k": 0, "edges": [["1,2,3,4", "1,2,4,3"]]})
    )
    assert main(["verify-cut", "--edges", str(bad_edge)]) == 2


def test_oracle_exact_exit_zero(capsys):
    code, out = run_cli(capsys, "oracle", "3", "1", "--mode", "edge", "--threads", "1")
    data = json.loads(out)
    assert code == 0
    assert data["kind"] == "exact" and data["value"] == 2
    assert data["stats"]["completed"]


def test_oracle_budget_exhausted_exit_three(capsys):
    code, out = run_cli(
        capsys, "oracle", "5", "1", "--max-nodes", "2000", "--threads", "1"
    )
    data = json.loads(out)
    assert code == 3
    assert data["kind"] == "upper-bound-only" and data["value"] == 6
    assert len(data["witness"]) == 6


def test_oracle_rejects_bad_budget():
    assert main(["oracle", "4", "1", "--max-nodes", "0"]) == 2


def test_table_output(capsys):
    code, out = run_cli(capsys, "table", "--max-n", "4", "--threads", "1")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "n,k,formula,construction_ok,oracle_kind,oracle_value,agree"
    assert lines[1] == "2,0,1,true,exact,1,true"
    assert lines[-1] == "4,2,6,true,exact,6,true"
    assert len(lines) == 1 + 6


def test_check_small(capsys):
    code, out = run_cli(capsys, "check", "3", "--samples", "40", "--seed", "5")
    assert code == 0
    assert "FAIL" not in out
    assert "PASS overall n=3" in out


def test_check_json(capsys):
    code, out = run_cli(capsys, "check", "4", "--samples", "30", "--seed", "1",
                        "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    names = [c["name"] for c in data["checks"]]
    assert "classical-connectivity" in names
    assert any(name.startswith("substar-cut") for name in names)
    assert any("exhaustive" in name for name in names)


def test_usage_error_exit_code():
    # argparse reports missing arguments through SystemExit(2)
    proc = subprocess.run(
        [sys.executable, "-m", "starcut", "info"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    proc = subprocess.run(
        [sys.executable, "-m", "starcut", "unknown-command"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
